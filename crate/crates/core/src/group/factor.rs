use std::fmt;

/// `n = p_1^r_1 * ... * p_m^r_m` with strictly increasing primes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PrimeFactorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl PrimeFactorization {
    /// Trial division; fine for the group orders handled here.
    pub fn of(n: u64) -> Self {
        assert!(n >= 1, "factorization of zero");
        let mut factors = Vec::new();
        let mut rest = n;
        let mut p = 2;
        while p * p <= rest {
            if rest.is_multiple_of(p) {
                let mut r = 0;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    r += 1;
                }
                factors.push((p, r));
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if rest > 1 {
            factors.push((rest, 1));
        }
        PrimeFactorization { n, factors }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.iter().map(|&(p, _)| p)
    }

    /// Number of distinct primes `m`.
    pub fn distinct_primes(&self) -> usize {
        self.factors.len()
    }

    pub fn is_prime_power(&self) -> bool {
        self.factors.len() == 1
    }

    /// Sum of exponents, counting multiplicity.
    pub fn total_exponent(&self) -> u32 {
        self.factors.iter().map(|&(_, r)| r).sum()
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, &(p, r)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            if r == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{r}")?;
            }
        }
        Ok(())
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `1` for prime powers, otherwise the sum of the exponents of `n`.
///
/// `n = 1` has no prime factors and is not covered by the usual definition;
/// it returns 1 so that `n - sigma(n)` still gives `sdim(K_1) = 0`.
pub fn sigma(f: &PrimeFactorization) -> u32 {
    match f.distinct_primes() {
        0 | 1 => 1,
        _ => f.total_exponent(),
    }
}

pub fn sigma_of(n: u64) -> u32 {
    sigma(&PrimeFactorization::of(n))
}

/// `Some(k)` when `n == p^k`.
pub fn log_exact(n: u64, p: u64) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut k = 0;
    let mut rest = n;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_values() {
        assert_eq!(sigma_of(8), 1);
        assert_eq!(sigma_of(12), 3);
        assert_eq!(sigma_of(30), 3);
        assert_eq!(sigma_of(7), 1);
        assert_eq!(sigma_of(36), 4);
        assert_eq!(sigma_of(1), 1);
    }

    #[test]
    fn factorization_invariants() {
        for n in 1..2000u64 {
            let f = PrimeFactorization::of(n);
            let product: u64 = f.factors().iter().map(|&(p, r)| p.pow(r)).product();
            assert_eq!(product, n);
            assert!(f.factors().windows(2).all(|w| w[0].0 < w[1].0));
            assert!(f.factors().iter().all(|&(p, r)| is_prime(p) && r >= 1));
        }
    }

    #[test]
    fn display() {
        assert_eq!(PrimeFactorization::of(360).to_string(), "2^3·3^2·5");
    }

    #[test]
    fn exact_logs() {
        assert_eq!(log_exact(1, 3), Some(0));
        assert_eq!(log_exact(27, 3), Some(3));
        assert_eq!(log_exact(12, 2), None);
    }
}
