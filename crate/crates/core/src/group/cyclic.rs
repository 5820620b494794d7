use std::collections::{BTreeMap, HashMap};

use super::factor::{is_prime, log_exact, PrimeFactorization};
use super::Group;
use crate::bitset::BitSet;
use crate::error::{Error, Result};

/// A cyclic subgroup `<generator>` with its sorted element list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicSubgroup {
    pub generator: usize,
    pub elements: Vec<usize>,
    members: BitSet,
}

impl CyclicSubgroup {
    pub fn generated_by(g: &Group, x: usize) -> Self {
        let mut elements = g.powers(x);
        elements.sort_unstable();
        let members = BitSet::from_indices(g.order(), elements.iter().copied());
        CyclicSubgroup {
            generator: x,
            elements,
            members,
        }
    }

    /// Wraps a member set already known to be a cyclic subgroup; the
    /// generator is its smallest element of full order.
    fn from_members(g: &Group, members: BitSet) -> Self {
        let order = members.count();
        let generator = members
            .iter()
            .find(|&x| g.element_order(x) == order)
            .expect("subset is not a cyclic subgroup");
        CyclicSubgroup {
            generator,
            elements: members.to_vec(),
            members,
        }
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn members(&self) -> &BitSet {
        &self.members
    }

    pub fn is_subgroup_of(&self, other: &CyclicSubgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn intersection(&self, g: &Group, other: &CyclicSubgroup) -> CyclicSubgroup {
        CyclicSubgroup::from_members(g, self.members.intersection(&other.members))
    }

    pub fn intersection_order(&self, other: &CyclicSubgroup) -> usize {
        self.members.intersection_count(&other.members)
    }
}

/// The maximal cyclic subgroups of a group, split by prime-power order.
#[derive(Clone, Debug)]
pub struct MaximalCyclicFamily {
    pub all: Vec<CyclicSubgroup>,
    /// prime `p` to the indices (into `all`) of members of `p`-power order.
    pub by_prime: BTreeMap<u64, Vec<usize>>,
    /// Indices of members whose order is not a prime power.
    pub mixed: Vec<usize>,
}

impl MaximalCyclicFamily {
    /// Members are listed by their smallest generating element.
    pub fn of(g: &Group) -> Self {
        let n = g.order();
        // x generates a non-maximal subgroup iff it lies in some <y> with |y| > |x|
        let mut dominated = vec![false; n];
        let mut seen_subgroups: HashMap<Vec<usize>, usize> = HashMap::new();
        let mut cyclic: Vec<CyclicSubgroup> = Vec::new();
        for x in 0..n {
            let sub = CyclicSubgroup::generated_by(g, x);
            if seen_subgroups.contains_key(&sub.elements) {
                continue;
            }
            for &z in &sub.elements {
                if g.element_order(z) < sub.order() {
                    dominated[z] = true;
                }
            }
            seen_subgroups.insert(sub.elements.clone(), cyclic.len());
            cyclic.push(sub);
        }
        let all: Vec<CyclicSubgroup> = cyclic.into_iter().filter(|s| !dominated[s.generator]).collect();

        let mut by_prime: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
        let mut mixed = Vec::new();
        for (i, m) in all.iter().enumerate() {
            let f = PrimeFactorization::of(m.order() as u64);
            if f.is_prime_power() {
                by_prime.entry(f.factors()[0].0).or_default().push(i);
            } else {
                mixed.push(i);
            }
        }
        MaximalCyclicFamily { all, by_prime, mixed }
    }

    /// Members of `p`-power order (the family `M_p`).
    pub fn prime_members(&self, p: u64) -> &[usize] {
        self.by_prime.get(&p).map_or(&[], Vec::as_slice)
    }

    pub fn mixed_members(&self) -> impl Iterator<Item = &CyclicSubgroup> {
        self.mixed.iter().map(|&i| &self.all[i])
    }

    /// Intersection chains for every member of `M_p`.
    pub fn chain_analysis(&self, g: &Group, p: u64) -> Result<Vec<ChainAnalysis>> {
        if !is_prime(p) || !(g.order() as u64).is_multiple_of(p) {
            return Err(Error::NotAPrimeDivisor { p, order: g.order() });
        }
        let family = self.prime_members(p);
        let every_member_is_p = family.len() == self.all.len();
        let analyses = family
            .iter()
            .map(|&i| {
                let m_i = &self.all[i];
                let mut chain: Vec<CyclicSubgroup> = Vec::new();
                for &j in family {
                    let c = m_i.intersection(g, &self.all[j]);
                    if !chain.iter().any(|existing| existing.elements == c.elements) {
                        chain.push(c);
                    }
                }
                // subgroups of a cyclic p-group are determined by their order
                chain.sort_by_key(CyclicSubgroup::order);

                let lambda_exp = if every_member_is_p {
                    -1
                } else {
                    let largest = self
                        .all
                        .iter()
                        .enumerate()
                        .filter(|(j, _)| !family.contains(j))
                        .map(|(_, m)| m_i.intersection_order(m))
                        .max()
                        .unwrap_or(1);
                    log_exact(largest as u64, p).expect("intersection inside a p-group") as i32
                };
                let s_prime = chain
                    .iter()
                    .position(|c| lambda_exp < 0 || (c.order() as u64) > p.pow(lambda_exp as u32))
                    .expect("the chain ends at M_i, which exceeds p^lambda")
                    + 1;
                ChainAnalysis {
                    subgroup_index: i,
                    prime: p,
                    s: chain.len(),
                    f: log_exact(m_i.order() as u64, p).unwrap(),
                    chain,
                    lambda_exp,
                    s_prime,
                }
            })
            .collect();
        Ok(analyses)
    }

    /// `max_i (s_i - s_i' + lambda_i + 2)` over `M_p`, or 0 when `M_p` is empty.
    pub fn alpha_p(&self, g: &Group, p: u64) -> usize {
        match self.chain_analysis(g, p) {
            Ok(analyses) => analyses.iter().map(ChainAnalysis::alpha).max().unwrap_or(0),
            Err(_) => 0,
        }
    }
}

/// Chain of intersections `C_1 ⊊ ... ⊊ C_s = M_i` for one maximal cyclic
/// `p`-subgroup `M_i`, plus the derived exponents.
#[derive(Clone, Debug)]
pub struct ChainAnalysis {
    /// Index of `M_i` in [`MaximalCyclicFamily::all`].
    pub subgroup_index: usize,
    pub prime: u64,
    /// Distinct intersections `M_i ∩ M_j`, `M_j ∈ M_p`, ascending by inclusion.
    /// Each entry's `generator` is the chain generator `c_iu`.
    pub chain: Vec<CyclicSubgroup>,
    pub s: usize,
    /// `lambda_i` as an exponent of `p`; `-1` when every maximal cyclic
    /// subgroup has `p`-power order.
    pub lambda_exp: i32,
    /// 1-based position of the first chain entry larger than `p^lambda_i`.
    pub s_prime: usize,
    /// `|M_i| = p^f`.
    pub f: u32,
}

impl ChainAnalysis {
    pub fn chain_generators(&self) -> Vec<usize> {
        self.chain.iter().map(|c| c.generator).collect()
    }

    pub fn alpha(&self) -> usize {
        let value = self.s as i64 - self.s_prime as i64 + self.lambda_exp as i64 + 2;
        value as usize
    }
}

pub fn maximal_cyclic_subgroups(g: &Group) -> MaximalCyclicFamily {
    MaximalCyclicFamily::of(g)
}

pub fn chain_analysis(g: &Group, p: u64) -> Result<Vec<ChainAnalysis>> {
    MaximalCyclicFamily::of(g).chain_analysis(g, p)
}

pub fn alpha_p(g: &Group, p: u64) -> usize {
    MaximalCyclicFamily::of(g).alpha_p(g, p)
}

/// Every element has order 1 or a prime power.
pub fn is_cp_group(g: &Group) -> bool {
    g.element_orders()
        .iter()
        .all(|&k| k == 1 || PrimeFactorization::of(k as u64).is_prime_power())
}
