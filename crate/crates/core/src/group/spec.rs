//! Group specifications and the textual grammar shared with the CLI:
//!
//! ```text
//! Z<n>  D<order>  Q<order>  E<p>^<k>  Ab[d1,d2,...]  S<n>  A<n>
//! G1xG2x...          direct product
//! cayley:<path>      Cayley table file
//! perm:<path>        permutation generators file
//! ```

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use super::factor::is_prime;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    /// Dihedral group; the parameter is the group order `2n`.
    Dihedral(u64),
    /// Generalized quaternion group; the parameter is the group order `4n`.
    GeneralizedQuaternion(u64),
    ElementaryAbelian { p: u64, k: u32 },
    /// Invariant factors `d_1 | d_2 | ... | d_k`.
    Abelian(Vec<u64>),
    Symmetric(u32),
    Alternating(u32),
    DirectProduct(Vec<GroupSpec>),
    CayleyFile(PathBuf),
    PermFile(PathBuf),
}

impl GroupSpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidSpec(msg));
        match self {
            GroupSpec::Cyclic(n) if *n == 0 => bad("cyclic group order must be positive".into()),
            GroupSpec::Dihedral(order) if order % 2 != 0 || *order < 6 => {
                bad(format!("dihedral order must be even and at least 6, got {order}"))
            }
            GroupSpec::GeneralizedQuaternion(order) if order % 4 != 0 || *order < 8 => bad(format!(
                "generalized quaternion order must be divisible by 4 and at least 8, got {order}"
            )),
            GroupSpec::ElementaryAbelian { p, k } if !is_prime(*p) || *k == 0 => {
                bad(format!("elementary abelian needs prime p and k >= 1, got E{p}^{k}"))
            }
            GroupSpec::Abelian(ds) => {
                if ds.is_empty() || ds.iter().any(|&d| d < 2) {
                    return bad(format!("invariant factors must all be >= 2, got {ds:?}"));
                }
                if ds.windows(2).any(|w| w[1] % w[0] != 0) {
                    return bad(format!("invariant factors must form a divisor chain, got {ds:?}"));
                }
                Ok(())
            }
            GroupSpec::Symmetric(n) | GroupSpec::Alternating(n) if !(1..=6).contains(n) => {
                bad(format!("permutation degree must be in 1..=6, got {n}"))
            }
            GroupSpec::DirectProduct(parts) => {
                if parts.len() < 2 {
                    return bad("direct product needs at least two factors".into());
                }
                parts.iter().try_for_each(GroupSpec::validate)
            }
            _ => Ok(()),
        }
    }

    /// Order implied by the spec, when it is known without reading a file.
    pub fn nominal_order(&self) -> Option<u64> {
        Some(match self {
            GroupSpec::Cyclic(n) | GroupSpec::Dihedral(n) | GroupSpec::GeneralizedQuaternion(n) => *n,
            GroupSpec::ElementaryAbelian { p, k } => p.checked_pow(*k)?,
            GroupSpec::Abelian(ds) => ds.iter().try_fold(1u64, |acc, &d| acc.checked_mul(d))?,
            GroupSpec::Symmetric(n) => (1..=*n as u64).product(),
            GroupSpec::Alternating(n) => ((1..=*n as u64).product::<u64>() / 2).max(1),
            GroupSpec::DirectProduct(parts) => parts
                .iter()
                .try_fold(1u64, |acc, g| acc.checked_mul(g.nominal_order()?))?,
            GroupSpec::CayleyFile(_) | GroupSpec::PermFile(_) => return None,
        })
    }

    /// Orders of cyclic factors when the spec is a product of abelian pieces.
    pub(crate) fn abelian_cyclic_parts(&self) -> Option<Vec<u64>> {
        match self {
            GroupSpec::Cyclic(n) => Some(vec![*n]),
            GroupSpec::ElementaryAbelian { p, k } => Some(vec![*p; *k as usize]),
            GroupSpec::Abelian(ds) => Some(ds.clone()),
            GroupSpec::DirectProduct(parts) => {
                let mut out = Vec::new();
                for part in parts {
                    out.extend(part.abelian_cyclic_parts()?);
                }
                Some(out)
            }
            _ => None,
        }
    }
}

fn parse_number<T: FromStr>(text: &str, full: &str) -> Result<T> {
    text.trim()
        .parse()
        .map_err(|_| Error::parse("group spec", format!("expected a number in {full:?}, got {text:?}")))
}

fn parse_factor(text: &str, full: &str) -> Result<GroupSpec> {
    let spec = if let Some(rest) = text.strip_prefix("Ab") {
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| Error::parse("group spec", format!("expected Ab[d1,...] in {full:?}")))?;
        let ds = inner
            .split(',')
            .map(|d| parse_number(d, full))
            .collect::<Result<Vec<u64>>>()?;
        GroupSpec::Abelian(ds)
    } else if let Some(rest) = text.strip_prefix('E') {
        let (p, k) = rest
            .split_once('^')
            .ok_or_else(|| Error::parse("group spec", format!("expected E<p>^<k> in {full:?}")))?;
        GroupSpec::ElementaryAbelian {
            p: parse_number(p, full)?,
            k: parse_number(k, full)?,
        }
    } else if let Some(rest) = text.strip_prefix('Z') {
        GroupSpec::Cyclic(parse_number(rest, full)?)
    } else if let Some(rest) = text.strip_prefix('D') {
        GroupSpec::Dihedral(parse_number(rest, full)?)
    } else if let Some(rest) = text.strip_prefix('Q') {
        GroupSpec::GeneralizedQuaternion(parse_number(rest, full)?)
    } else if let Some(rest) = text.strip_prefix('S') {
        GroupSpec::Symmetric(parse_number(rest, full)?)
    } else if let Some(rest) = text.strip_prefix('A') {
        GroupSpec::Alternating(parse_number(rest, full)?)
    } else {
        return Err(Error::parse("group spec", format!("unknown group family in {full:?}")));
    };
    Ok(spec)
}

impl FromStr for GroupSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let spec = if let Some(path) = s.strip_prefix("cayley:") {
            GroupSpec::CayleyFile(PathBuf::from(path))
        } else if let Some(path) = s.strip_prefix("perm:") {
            GroupSpec::PermFile(PathBuf::from(path))
        } else {
            let mut parts = s
                .split('x')
                .map(|part| parse_factor(part.trim(), s))
                .collect::<Result<Vec<_>>>()?;
            if parts.len() == 1 {
                parts.pop().unwrap()
            } else {
                GroupSpec::DirectProduct(parts)
            }
        };
        spec.validate()?;
        Ok(spec)
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "Z{n}"),
            GroupSpec::Dihedral(n) => write!(f, "D{n}"),
            GroupSpec::GeneralizedQuaternion(n) => write!(f, "Q{n}"),
            GroupSpec::ElementaryAbelian { p, k } => write!(f, "E{p}^{k}"),
            GroupSpec::Abelian(ds) => {
                let ds: Vec<String> = ds.iter().map(u64::to_string).collect();
                write!(f, "Ab[{}]", ds.join(","))
            }
            GroupSpec::Symmetric(n) => write!(f, "S{n}"),
            GroupSpec::Alternating(n) => write!(f, "A{n}"),
            GroupSpec::DirectProduct(parts) => {
                for (i, part) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "x")?;
                    }
                    write!(f, "{part}")?;
                }
                Ok(())
            }
            GroupSpec::CayleyFile(path) => write!(f, "cayley:{}", path.display()),
            GroupSpec::PermFile(path) => write!(f, "perm:{}", path.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_every_family() {
        let cases = [
            ("Z12", GroupSpec::Cyclic(12)),
            ("D12", GroupSpec::Dihedral(12)),
            ("Q8", GroupSpec::GeneralizedQuaternion(8)),
            ("E2^3", GroupSpec::ElementaryAbelian { p: 2, k: 3 }),
            ("Ab[2,6]", GroupSpec::Abelian(vec![2, 6])),
            ("S4", GroupSpec::Symmetric(4)),
            ("A4", GroupSpec::Alternating(4)),
            (
                "Z3xQ8",
                GroupSpec::DirectProduct(vec![GroupSpec::Cyclic(3), GroupSpec::GeneralizedQuaternion(8)]),
            ),
            ("cayley:tables/z3.txt", GroupSpec::CayleyFile("tables/z3.txt".into())),
            ("perm:gens.txt", GroupSpec::PermFile("gens.txt".into())),
        ];
        for (text, expected) in cases {
            let parsed: GroupSpec = text.parse().unwrap();
            assert_eq!(parsed, expected, "{text}");
            assert_eq!(parsed.to_string(), text);
        }
    }

    #[test]
    fn rejects_bad_parameters() {
        for text in ["D7", "D4", "Q6", "Q4", "E4^2", "E2^0", "Ab[4,6]", "Ab[1,2]", "S7", "Z0", "X5", "Z", "Ab2,6"] {
            assert!(text.parse::<GroupSpec>().is_err(), "{text} should be rejected");
        }
    }

    #[test]
    fn nominal_orders() {
        let order = |s: &str| s.parse::<GroupSpec>().unwrap().nominal_order();
        assert_eq!(order("S5"), Some(120));
        assert_eq!(order("A5"), Some(60));
        assert_eq!(order("Z3xQ8"), Some(24));
        assert_eq!(order("Ab[2,2,6]"), Some(24));
        assert_eq!(order("A2"), Some(1));
    }
}
