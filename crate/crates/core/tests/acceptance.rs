//! Acceptance suite. Every criterion is an exact-equality check; each prints
//! one PASS/FAIL line and the process exits non-zero if any fails.

use std::time::{Duration, Instant};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use sdim_core::corpus::corpus;
use sdim_core::group::{sigma_of, GroupSpec};
use sdim_core::sdim::{complement_is_non_twin_clique, evaluate_closed_form, omega_reduced_group};
use sdim_core::{
    alpha_p, build_group, chain_analysis, classify_n_minus_2, clique_witness_alpha_p, clique_witness_cyclic,
    is_strong_resolving_set, max_clique, maximal_cyclic_subgroups, power_graph, sdim_group, sdim_oracle,
    sdim_via_reduction, Graph, Group, Method,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn group(spec: &GroupSpec) -> Group {
    build_group(spec).unwrap_or_else(|e| panic!("building {spec}: {e}"))
}

fn oracle_value(g: &Group) -> Result<usize, String> {
    sdim_oracle(&power_graph(g)).map(|r| r.value).map_err(|e| format!("{}: oracle: {e}", g.spec()))
}

fn theorem_value(g: &Group) -> Result<usize, String> {
    sdim_group(g).map(|r| r.value).map_err(|e| format!("{}: {e}", g.spec()))
}

fn reduction_value(g: &Group) -> Result<usize, String> {
    sdim_via_reduction(&power_graph(g)).map(|r| r.value).map_err(|e| format!("{}: reduction: {e}", g.spec()))
}

fn within(elapsed: Duration, limit: Duration) -> Result<(), String> {
    if elapsed < limit {
        Ok(())
    } else {
        Err(format!("took {elapsed:.2?}, limit {limit:?}"))
    }
}

/// A closed form must apply, and agree with the theorem and the other routes.
fn three_way(spec: &GroupSpec, closed: Method, expected: Option<usize>, second: fn(&Group) -> Result<usize, String>) -> Result<usize, String> {
    let g = group(spec);
    let formula = evaluate_closed_form(&g, closed).ok_or_else(|| format!("{spec}: {closed} does not apply"))?;
    let theorem = theorem_value(&g)?;
    let other = second(&g)?;
    let oracle = oracle_value(&g)?;
    if let Some(expected) = expected {
        if formula != expected {
            return Err(format!("{spec}: {closed} = {formula}, expected {expected}"));
        }
    }
    if formula != theorem || formula != other || formula != oracle {
        return Err(format!("{spec}: {closed} {formula}, theorem {theorem}, second route {other}, oracle {oracle}"));
    }
    Ok(formula)
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    for n in 2..=60u64 {
        let g = group(&GroupSpec::Cyclic(n));
        let expected = n as usize - sigma_of(n) as usize;
        let theorem = theorem_value(&g)?;
        let oracle = oracle_value(&g)?;
        if theorem != expected || oracle != expected {
            return Err(format!("Z{n}: theorem {theorem}, oracle {oracle}, n - sigma_n = {expected}"));
        }
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("Z2..Z60 all equal n - sigma_n ({:.2?})", start.elapsed()))
}

fn criterion_2() -> Outcome {
    let mut hits = Vec::new();
    for spec in corpus() {
        let g = group(&spec);
        let n = g.order();
        let value = theorem_value(&g)?;
        let cyclic_prime_power = g.is_cyclic() && g.factorization().is_prime_power();
        if (value == n - 1) != cyclic_prime_power {
            return Err(format!("{spec}: sdim {value}, n = {n}, cyclic prime power = {cyclic_prime_power}"));
        }
        if cyclic_prime_power {
            hits.push(spec.to_string());
        }
    }
    Ok(format!("n - 1 exactly for {}", hits.join(", ")))
}

fn criterion_3() -> Outcome {
    let start = Instant::now();
    for n in 3..=20u64 {
        three_way(&GroupSpec::Dihedral(2 * n), Method::ClosedFormDihedral, None, theorem_value)?;
    }
    within(start.elapsed(), Duration::from_secs(30))?;
    Ok(format!("D6..D40 agree ({:.2?})", start.elapsed()))
}

fn criterion_4() -> Outcome {
    for n in 2..=12u64 {
        three_way(&GroupSpec::GeneralizedQuaternion(4 * n), Method::ClosedFormQuaternion, None, theorem_value)?;
    }
    Ok("Q8..Q48 agree".into())
}

fn criterion_5() -> Outcome {
    let mut values = Vec::new();
    for (p, k) in [(2, 2), (2, 3), (2, 4), (3, 2), (5, 2)] {
        let spec = GroupSpec::ElementaryAbelian { p, k };
        let expected = p.pow(k) as usize - 2;
        let v = three_way(&spec, Method::ClosedFormElementaryAbelian, Some(expected), reduction_value)?;
        values.push(format!("{spec}={v}"));
    }
    Ok(values.join(" "))
}

fn criterion_6() -> Outcome {
    let mut values = Vec::new();
    for s in ["Z2xZ4", "Z2xZ8", "Z4xZ4", "Z3xZ9", "Q8", "Q16", "D8", "D16"] {
        let spec: GroupSpec = s.parse().unwrap();
        let g = group(&spec);
        let p = g.factorization().factors()[0].0;
        let longest = chain_analysis(&g, p).map_err(|e| e.to_string())?.iter().map(|a| a.s).max().unwrap();
        let expected = g.order() - longest;
        let pinned = (s == "Z2xZ4").then_some(5);
        if pinned.is_some_and(|v| v != expected) {
            return Err(format!("Z2xZ4: n - max s_i = {expected}, expected 5"));
        }
        let v = three_way(&spec, Method::ClosedFormPGroup, Some(expected), reduction_value)?;
        values.push(format!("{s}={v}"));
    }
    Ok(values.join(" "))
}

fn criterion_7() -> Outcome {
    let mut values = Vec::new();
    for s in ["Ab[2,6]", "Ab[2,12]", "Ab[2,2,6]"] {
        let spec: GroupSpec = s.parse().unwrap();
        let GroupSpec::Abelian(ds) = &spec else { unreachable!() };
        let expected = ds.iter().product::<u64>() as usize - (sigma_of(*ds.last().unwrap()) as usize + 1);
        let v = three_way(&spec, Method::ClosedFormAbelian, Some(expected), reduction_value)?;
        values.push(format!("{s}={v}"));
    }
    Ok(values.join(" "))
}

fn criterion_8() -> Outcome {
    let specs = corpus();
    if specs.len() < 40 {
        return Err(format!("corpus has only {} groups", specs.len()));
    }
    for required in ["A4", "S3", "S4", "Z15", "Q16", "Z2xZ4"] {
        if !specs.iter().any(|s| s.to_string() == required) {
            return Err(format!("corpus is missing {required}"));
        }
    }
    let mut positives = Vec::new();
    for spec in &specs {
        let g = group(spec);
        let value = theorem_value(&g)?;
        let class = classify_n_minus_2(&g);
        if class.is_some() != (value + 2 == g.order()) {
            return Err(format!("{spec}: sdim {value}, n {}, classifier {class:?}", g.order()));
        }
        if let Some(c) = class {
            positives.push(format!("{spec}({})", c.label()));
        }
    }
    Ok(format!("{} groups; n - 2 exactly for {}", specs.len(), positives.join(" ")))
}

fn criterion_9() -> Outcome {
    let specs = corpus();
    for spec in &specs {
        let g = group(spec);
        let result = sdim_group(&g).map_err(|e| format!("{spec}: {e}"))?;
        let witness = result.witness.ok_or_else(|| format!("{spec}: no witness"))?;
        let pg = power_graph(&g);
        if witness.len() != result.value || !is_strong_resolving_set(&pg, &witness).map_err(|e| e.to_string())? {
            return Err(format!("{spec}: witness of size {} fails (sdim {})", witness.len(), result.value));
        }
        let oracle = sdim_oracle(&pg).map_err(|e| e.to_string())?;
        if !oracle.verified || oracle.value != result.value {
            return Err(format!("{spec}: oracle witness {} / verified {}", oracle.value, oracle.verified));
        }
    }
    Ok(format!("{} witnesses verified", specs.len()))
}

fn random_graph(rng: &mut StdRng, n: usize, density: f64) -> Graph {
    let mut g = Graph::empty(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(density) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random graph plus a universal vertex: connected with diameter at most 2.
fn random_diameter_two(rng: &mut StdRng, n: usize) -> Graph {
    let density = rng.random_range(0.1..0.8);
    let base = random_graph(rng, n - 1, density);
    let hub = rng.random_range(0..n);
    let relabel = |v: usize| if v >= hub { v + 1 } else { v };
    let mut out = Graph::empty(n);
    for (u, v) in base.edges() {
        out.add_edge(relabel(u), relabel(v));
    }
    for v in (0..n).filter(|&v| v != hub) {
        out.add_edge(hub, v);
    }
    out
}

/// Maximum clique by enumerating all 2^n vertex subsets.
fn brute_clique_number(g: &Graph) -> usize {
    let n = g.vertex_count();
    let adj: Vec<u32> = (0..n).map(|v| g.neighbors(v).iter().fold(0, |m, w| m | 1 << w)).collect();
    let mut is_clique = vec![false; 1 << n];
    is_clique[0] = true;
    let mut best = 0;
    for mask in 1usize..1 << n {
        let v = mask.trailing_zeros() as usize;
        let rest = mask & (mask - 1);
        is_clique[mask] = is_clique[rest] && rest as u32 & !adj[v] == 0;
        if is_clique[mask] {
            best = best.max(mask.count_ones() as usize);
        }
    }
    best
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    let mut rng = StdRng::seed_from_u64(0x5d1_2018);

    for i in 0..200 {
        let n = rng.random_range(1..=16);
        let density = rng.random_range(0.05..0.95);
        let g = random_graph(&mut rng, n, density);
        let found = max_clique(&g);
        let brute = brute_clique_number(&g);
        if found.size != brute || !g.is_clique(&found.members) {
            return Err(format!("(a) graph {i}: solver {} vs brute force {brute}", found.size));
        }
    }

    for i in 0..50 {
        let n = rng.random_range(2..=14);
        let g = random_diameter_two(&mut rng, n);
        let reduction = sdim_via_reduction(&g).map_err(|e| format!("(b) graph {i}: {e}"))?;
        let oracle = sdim_oracle(&g).map_err(|e| format!("(b) graph {i}: {e}"))?;
        if reduction.value != oracle.value || !reduction.verified || !oracle.verified {
            return Err(format!("(b) graph {i}: reduction {} vs oracle {}", reduction.value, oracle.value));
        }
    }

    let mut subsets = 0;
    for i in 0..20 {
        let n = rng.random_range(2..=9);
        let g = random_diameter_two(&mut rng, n);
        for mask in 0u32..1 << n {
            let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            let resolving = is_strong_resolving_set(&g, &set).map_err(|e| e.to_string())?;
            if resolving != complement_is_non_twin_clique(&g, &set) {
                return Err(format!("(c) graph {i}, set {set:?}: resolving = {resolving}"));
            }
            subsets += 1;
        }
    }

    within(start.elapsed(), Duration::from_secs(120))?;
    Ok(format!(
        "(a) 200 clique checks, (b) 50 reduction/oracle pairs, (c) {subsets} subsets ({:.2?})",
        start.elapsed()
    ))
}

fn criterion_11() -> Outcome {
    for n in 2..=60u64 {
        let g = group(&GroupSpec::Cyclic(n));
        let w = clique_witness_cyclic(n);
        if w.elements.len() != sigma_of(n) as usize || !power_graph(&g).is_non_twin_clique(&w.elements) {
            return Err(format!("Z{n}: cyclic witness {:?} (sigma_n = {})", w.orders, sigma_of(n)));
        }
    }
    let mut checked = 0;
    for spec in corpus() {
        let g = group(&spec);
        let family = maximal_cyclic_subgroups(&g);
        let pg = power_graph(&g);
        for p in g.factorization().primes() {
            if family.prime_members(p).is_empty() {
                continue;
            }
            let w = clique_witness_alpha_p(&g, p).map_err(|e| format!("{spec}, p = {p}: {e}"))?;
            let alpha = alpha_p(&g, p);
            if w.len() != alpha || !pg.is_non_twin_clique(&w) {
                return Err(format!("{spec}, p = {p}: witness {w:?} vs alpha_p = {alpha}"));
            }
            if alpha > omega_reduced_group(&g) {
                return Err(format!("{spec}, p = {p}: alpha_p exceeds omega(R)"));
            }
            checked += 1;
        }
    }
    Ok(format!("cyclic witnesses for Z2..Z60, {checked} alpha_p witnesses"))
}

fn main() {
    let criteria: [Criterion; 11] = [
        ("cyclic law n - sigma_n, n in 2..60", criterion_1),
        ("n - 1 exactly for cyclic prime powers", criterion_2),
        ("dihedral 2n - (sigma_n + 1), n in 3..20", criterion_3),
        ("quaternion 4n - (sigma_2n + 1), n in 2..12", criterion_4),
        ("elementary abelian p^k - 2", criterion_5),
        ("noncyclic p-groups n - max s_i", criterion_6),
        ("abelian prod d_i - (sigma_dk + 1)", criterion_7),
        ("n - 2 classification over the corpus", criterion_8),
        ("witness soundness over the corpus", criterion_9),
        ("clique / reduction / resolving-set property suites", criterion_10),
        ("constructive clique witnesses", criterion_11),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(detail) => println!("PASS  {:>2}  {name}: {detail}", i + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL  {:>2}  {name}: {detail}", i + 1);
            }
        }
    }
    println!("{} of {} acceptance criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
