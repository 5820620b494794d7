//! Group construction from [`GroupSpec`]s.
//!
//! Element indexing is fixed per family so that witnesses are reproducible:
//!
//! * `Z<n>`: residue `i` is element `i`.
//! * `D<2n>`: `a^i` is element `i`, the reflection `b a^i` is element `n + i`.
//! * `Q<4n>`: `x^i` is element `i`, `y x^i` is element `2n + i`.
//! * `E<p>^<k>`, `Ab[..]`: mixed-radix vectors, first coordinate most significant.
//! * `S<n>`, `A<n>`: permutations of `0..n` in lexicographic order.
//! * products: `(g, h)` is `g * |H| + h`.
//! * `perm:` files: first-discovery order of a breadth-first closure.

use std::collections::{HashMap, VecDeque};
use std::fmt;
use std::path::Path;

use itertools::Itertools;

use super::{Group, GroupSpec, ASSOCIATIVITY_CHECK_LIMIT};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct BuildOptions {
    /// Largest group a permutation closure may produce.
    pub closure_cap: usize,
    /// Accept Cayley files above [`ASSOCIATIVITY_CHECK_LIMIT`] without the
    /// associativity check.
    pub trust_large_tables: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            closure_cap: 5040,
            trust_large_tables: false,
        }
    }
}

pub fn build_group(spec: &GroupSpec) -> Result<Group> {
    build_group_with(spec, &BuildOptions::default())
}

pub fn build_group_with(spec: &GroupSpec, options: &BuildOptions) -> Result<Group> {
    spec.validate()?;
    match spec {
        GroupSpec::CayleyFile(path) => {
            let (n, table) = parse_cayley(&read(path)?)?;
            if table[..n].iter().enumerate().any(|(j, &v)| v as usize != j)
                || (0..n).any(|i| table[i * n] as usize != i)
            {
                return Err(Error::NotAGroup("element 0 must be the identity".into()));
            }
            let check = n <= ASSOCIATIVITY_CHECK_LIMIT;
            if !check && !options.trust_large_tables {
                return Err(Error::UncheckedTable {
                    order: n,
                    limit: ASSOCIATIVITY_CHECK_LIMIT,
                });
            }
            Group::from_table(n, table, spec.clone(), check)
        }
        GroupSpec::PermFile(path) => {
            let generators = parse_perm_file(&read(path)?)?;
            let elements = closure(&generators, options.closure_cap)?;
            from_elements(&elements, |a, b| a.then(b), spec)
        }
        _ => {
            let (n, table) = raw_table(spec)?;
            Group::from_table(n, table, spec.clone(), n <= ASSOCIATIVITY_CHECK_LIMIT)
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_owned(),
        source,
    })
}

fn tabulate(n: usize, mul: impl Fn(usize, usize) -> usize) -> (usize, Vec<u32>) {
    let mut table = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            table.push(mul(a, b) as u32);
        }
    }
    (n, table)
}

fn too_large(spec: &GroupSpec) -> Error {
    Error::InvalidSpec(format!("{spec} is too large to tabulate"))
}

/// Multiplication table of a built-in family.
fn raw_table(spec: &GroupSpec) -> Result<(usize, Vec<u32>)> {
    let order = spec.nominal_order().ok_or_else(|| too_large(spec))?;
    if order > u32::MAX as u64 || order.saturating_mul(order) > (1 << 28) {
        return Err(too_large(spec));
    }
    let out = match spec {
        GroupSpec::Cyclic(n) => {
            let n = *n as usize;
            tabulate(n, |a, b| (a + b) % n)
        }
        GroupSpec::Dihedral(order) => {
            let n = (*order / 2) as usize;
            // b^k a^i · b^l a^j = b^(k+l) a^((-1)^l i + j)
            tabulate(2 * n, |x, y| {
                let (k, i) = (x / n, x % n);
                let (l, j) = (y / n, y % n);
                let i = if l == 1 { (n - i) % n } else { i };
                ((k + l) % 2) * n + (i + j) % n
            })
        }
        GroupSpec::GeneralizedQuaternion(order) => {
            let n = (*order / 4) as usize;
            let m = 2 * n;
            // x y = y x^-1 and y^2 = x^n
            tabulate(2 * m, |x, y| {
                let (k, i) = (x / m, x % m);
                let (l, j) = (y / m, y % m);
                match (k, l) {
                    (_, 0) => k * m + (i + j) % m,
                    (0, _) => m + (j + m - i) % m,
                    _ => (n + j + m - i) % m,
                }
            })
        }
        GroupSpec::ElementaryAbelian { p, k } => abelian_table(&vec![*p as usize; *k as usize]),
        GroupSpec::Abelian(ds) => abelian_table(&ds.iter().map(|&d| d as usize).collect::<Vec<_>>()),
        GroupSpec::Symmetric(n) => permutation_table((0..*n as usize).permutations(*n as usize).collect()),
        GroupSpec::Alternating(n) => permutation_table(
            (0..*n as usize)
                .permutations(*n as usize)
                .filter(|p| Permutation(p.clone()).is_even())
                .collect(),
        ),
        GroupSpec::DirectProduct(parts) => {
            let mut acc = raw_table(&parts[0])?;
            for part in &parts[1..] {
                let (n2, t2) = raw_table(part)?;
                let (n1, t1) = acc;
                acc = tabulate(n1 * n2, |x, y| {
                    let (g1, h1) = (x / n2, x % n2);
                    let (g2, h2) = (y / n2, y % n2);
                    t1[g1 * n1 + g2] as usize * n2 + t2[h1 * n2 + h2] as usize
                });
            }
            acc
        }
        GroupSpec::CayleyFile(_) | GroupSpec::PermFile(_) => {
            return Err(Error::InvalidSpec(format!(
                "{spec} cannot appear inside a direct product"
            )))
        }
    };
    Ok(out)
}

fn abelian_table(moduli: &[usize]) -> (usize, Vec<u32>) {
    let n = moduli.iter().product();
    tabulate(n, |mut a, mut b| {
        let mut out = 0;
        let mut scale = 1;
        for &d in moduli.iter().rev() {
            out += ((a % d + b % d) % d) * scale;
            a /= d;
            b /= d;
            scale *= d;
        }
        out
    })
}

fn permutation_table(perms: Vec<Vec<usize>>) -> (usize, Vec<u32>) {
    let index: HashMap<&[usize], usize> = perms.iter().enumerate().map(|(i, p)| (p.as_slice(), i)).collect();
    tabulate(perms.len(), |a, b| {
        let product: Vec<usize> = perms[a].iter().map(|&x| perms[b][x]).collect();
        index[product.as_slice()]
    })
}

fn from_elements<T, F>(elements: &[T], mul: F, spec: &GroupSpec) -> Result<Group>
where
    T: std::hash::Hash + Eq,
    F: Fn(&T, &T) -> T,
{
    let index: HashMap<&T, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
    let (n, table) = tabulate(elements.len(), |a, b| index[&mul(&elements[a], &elements[b])]);
    Group::from_table(n, table, spec.clone(), false)
}

/// A permutation of `0..k`, stored as its image list.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Permutation(pub Vec<usize>);

impl Permutation {
    pub fn identity(k: usize) -> Self {
        Permutation((0..k).collect())
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    /// Apply `self` first, then `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x]).collect())
    }

    pub fn is_even(&self) -> bool {
        let mut seen = vec![false; self.0.len()];
        let mut transpositions = 0;
        for start in 0..self.0.len() {
            let mut len = 0usize;
            let mut x = start;
            while !seen[x] {
                seen[x] = true;
                x = self.0[x];
                len += 1;
            }
            transpositions += len.saturating_sub(1);
        }
        transpositions % 2 == 0
    }

    fn extend_to(&mut self, k: usize) {
        let start = self.0.len();
        self.0.extend(start..k);
    }
}

impl fmt::Display for Permutation {
    /// Disjoint-cycle notation on points `1..=k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut seen = vec![false; self.0.len()];
        let mut any = false;
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] == start {
                continue;
            }
            any = true;
            write!(f, "(")?;
            let mut x = start;
            let mut first = true;
            while !seen[x] {
                seen[x] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{}", x + 1)?;
                first = false;
                x = self.0[x];
            }
            write!(f, ")")?;
        }
        if !any {
            write!(f, "()")?;
        }
        Ok(())
    }
}

fn parse_cycles(line: &str) -> Result<Vec<Vec<usize>>> {
    let err = |msg: String| Error::parse("permutation", format!("{msg} in {line:?}"));
    let mut cycles = Vec::new();
    let mut rest = line.trim();
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| err("expected '('".into()))?;
        let close = body.find(')').ok_or_else(|| err("unclosed cycle".into()))?;
        let points = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| match t.parse::<usize>() {
                Ok(p) if p >= 1 => Ok(p - 1),
                _ => Err(err(format!("bad point {t:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        cycles.push(points);
        rest = body[close + 1..].trim_start();
    }
    Ok(cycles)
}

/// One permutation per line in disjoint-cycle notation on points `1..k`.
/// Blank lines and lines starting with `#` are skipped. All permutations
/// are extended to the largest point mentioned anywhere in the file.
pub fn parse_perm_file(text: &str) -> Result<Vec<Permutation>> {
    let lines: Vec<Vec<Vec<usize>>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty() && !l.starts_with('#'))
        .map(parse_cycles)
        .collect::<Result<_>>()?;
    if lines.is_empty() {
        return Err(Error::parse("permutation file", "no generators"));
    }
    let degree = lines.iter().flatten().flatten().map(|&p| p + 1).max().unwrap_or(1);
    lines
        .into_iter()
        .map(|cycles| {
            let mut image: Vec<usize> = (0..degree).collect();
            let mut moved = vec![false; degree];
            for cycle in &cycles {
                for (i, &p) in cycle.iter().enumerate() {
                    if std::mem::replace(&mut moved[p], true) {
                        return Err(Error::parse("permutation", format!("point {} repeated", p + 1)));
                    }
                    image[p] = cycle[(i + 1) % cycle.len()];
                }
            }
            let mut perm = Permutation(image);
            perm.extend_to(degree);
            Ok(perm)
        })
        .collect()
}

/// Breadth-first closure of a generating set; the identity comes first and
/// the rest follow in discovery order.
pub(crate) fn closure(generators: &[Permutation], cap: usize) -> Result<Vec<Permutation>> {
    let degree = generators.first().map_or(1, Permutation::degree);
    let identity = Permutation::identity(degree);
    let mut index: HashMap<Permutation, usize> = HashMap::from([(identity.clone(), 0)]);
    let mut elements = vec![identity];
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for gen in generators {
            let next = elements[i].then(gen);
            if !index.contains_key(&next) {
                if elements.len() == cap {
                    return Err(Error::ClosureTooLarge { cap });
                }
                index.insert(next.clone(), elements.len());
                queue.push_back(elements.len());
                elements.push(next);
            }
        }
    }
    Ok(elements)
}

/// First line `n`, then `n` rows of `n` whitespace-separated entries.
pub fn parse_cayley(text: &str) -> Result<(usize, Vec<u32>)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let n: usize = lines
        .next()
        .ok_or_else(|| Error::parse("Cayley table", "empty file"))?
        .parse()
        .map_err(|_| Error::parse("Cayley table", "first line must be the order"))?;
    if n == 0 {
        return Err(Error::parse("Cayley table", "order must be positive"));
    }
    let mut table = Vec::with_capacity(n * n);
    for row in 0..n {
        let line = lines
            .next()
            .ok_or_else(|| Error::parse("Cayley table", format!("missing row {row}")))?;
        let before = table.len();
        for tok in line.split_whitespace() {
            let v: u32 = tok
                .parse()
                .map_err(|_| Error::parse("Cayley table", format!("bad entry {tok:?} in row {row}")))?;
            if v as usize >= n {
                return Err(Error::parse("Cayley table", format!("entry {v} out of range in row {row}")));
            }
            table.push(v);
        }
        if table.len() - before != n {
            return Err(Error::parse("Cayley table", format!("row {row} has {} entries", table.len() - before)));
        }
    }
    if lines.next().is_some() {
        return Err(Error::parse("Cayley table", "trailing rows"));
    }
    Ok((n, table))
}

/// Cayley file text for a group, in its own element indexing.
pub fn to_cayley_text(g: &Group) -> String {
    let n = g.order();
    let mut out = format!("{n}\n");
    for row in g.table().chunks(n) {
        out.push_str(&row.iter().join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Write;

    fn group(s: &str) -> Group {
        build_group(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn dihedral_twelve_has_seven_involutions() {
        let d12 = group("D12");
        assert_eq!(d12.order(), 12);
        // brute force over the table rather than the cached orders
        let square_trivial = (0..12).filter(|&x| d12.mul(x, x) == d12.identity()).count();
        assert_eq!(square_trivial, 8);
        assert_eq!(square_trivial - 1, d12.involutions().count());
        // rotations first, reflections after
        assert!((1..6).all(|i| d12.element_order(i) > 1 && d12.mul(i, 6 - i) == 0));
        assert!((6..12).all(|i| d12.element_order(i) == 2));
    }

    #[test]
    fn builtin_families_are_groups() {
        // built-ins at most order 128 went through the full associativity check
        for s in ["Z1", "Z60", "D6", "D40", "Q8", "Q48", "E2^4", "E5^2", "Ab[2,2,6]", "S1", "S4", "A4", "Z3xQ8", "Z2xS3", "D8xZ2"] {
            let g = group(s);
            assert_eq!(g.order() as u64, g.spec().nominal_order().unwrap(), "{s}");
        }
        assert_eq!(group("S5").order(), 120);
        assert_eq!(group("A5").order(), 60);
        assert_eq!(group("S6").order(), 720);
    }

    #[test]
    fn symmetric_and_alternating_orders() {
        let s4 = group("S4");
        let mut counts = [0usize; 5];
        for x in 0..24 {
            counts[s4.element_order(x)] += 1;
        }
        assert_eq!(counts, [0, 1, 9, 8, 6]);
        let a4 = group("A4");
        assert!((0..12).all(|x| [1, 2, 3].contains(&a4.element_order(x))));
    }

    #[test]
    fn perm_closure_rebuilds_s4() {
        let gens = parse_perm_file("(1 2 3 4)\n(1 2)\n").unwrap();
        let elements = closure(&gens, 5040).unwrap();
        assert_eq!(elements.len(), 24);
        assert_eq!(elements[0], Permutation::identity(4));
        assert!(matches!(closure(&gens, 10), Err(Error::ClosureTooLarge { cap: 10 })));
    }

    #[test]
    fn perm_file_syntax() {
        let perms = parse_perm_file("# comment\n()\n(1 3)(2 5)\n").unwrap();
        assert_eq!(perms.len(), 2);
        assert_eq!(perms[0], Permutation::identity(5));
        assert_eq!(perms[1].0, vec![2, 4, 0, 3, 1]);
        assert_eq!(perms[1].to_string(), "(1 3)(2 5)");
        assert!(parse_perm_file("(1 2 1)").is_err());
        assert!(parse_perm_file("1 2").is_err());
        assert!(parse_perm_file("(0 1)").is_err());
    }

    #[test]
    fn cayley_files() {
        let dir = std::env::temp_dir().join(format!("sdim-core-build-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();

        let good = dir.join("z3.txt");
        std::fs::write(&good, "3\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        let g = build_group(&GroupSpec::CayleyFile(good)).unwrap();
        assert!(g.is_cyclic());

        // Latin square with identity 0 that fails associativity
        let bad = dir.join("bad.txt");
        let mut f = std::fs::File::create(&bad).unwrap();
        writeln!(f, "5\n0 1 2 3 4\n1 0 3 4 2\n2 4 0 1 3\n3 2 4 0 1\n4 3 1 2 0").unwrap();
        assert!(matches!(build_group(&GroupSpec::CayleyFile(bad)), Err(Error::NotAGroup(_))));

        // a 3x3 table that is not associative (and not Latin either)
        let bad3 = dir.join("bad3.txt");
        std::fs::write(&bad3, "3\n0 1 2\n1 0 0\n2 0 1\n").unwrap();
        assert!(matches!(build_group(&GroupSpec::CayleyFile(bad3)), Err(Error::NotAGroup(_))));

        let not_identity_first = dir.join("shifted.txt");
        std::fs::write(&not_identity_first, "2\n1 0\n0 1\n").unwrap();
        assert!(build_group(&GroupSpec::CayleyFile(not_identity_first)).is_err());

        let big = dir.join("z130.txt");
        std::fs::write(&big, to_cayley_text(&group("Z130"))).unwrap();
        let spec = GroupSpec::CayleyFile(big);
        assert!(matches!(build_group(&spec), Err(Error::UncheckedTable { order: 130, .. })));
        let options = BuildOptions {
            trust_large_tables: true,
            ..BuildOptions::default()
        };
        assert_eq!(build_group_with(&spec, &options).unwrap().order(), 130);

        std::fs::remove_dir_all(&dir).unwrap();
    }

    #[test]
    fn cayley_parse_errors() {
        assert!(parse_cayley("").is_err());
        assert!(parse_cayley("2\n0 1\n").is_err());
        assert!(parse_cayley("2\n0 1\n1 2\n").is_err());
        assert!(parse_cayley("2\n0 1 1\n1 0\n").is_err());
    }
}
