//! Exponent vectors shared by the commutative and Weyl term engines.

use std::fmt;

/// A monomial as a plain exponent vector. The derived `Ord` is only the
/// storage order used by term maps; computational orders live in
/// [`crate::order::MonomialOrder`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial { exps }
    }

    pub fn one(nvars: usize) -> Self {
        Monomial {
            exps: vec![0; nvars],
        }
    }

    /// Single variable to a power.
    pub fn var_pow(nvars: usize, var: usize, pow: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[var] = pow;
        Monomial { exps }
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var]
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming divisibility.
    pub fn quotient_into(&self, other: &Monomial) -> Monomial {
        debug_assert!(self.divides(other));
        Monomial {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        }
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps
            .iter()
            .zip(&other.exps)
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with nonzero exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    /// Weighted degree under an integer weight vector.
    pub fn weighted_degree(&self, weights: &[i64]) -> i64 {
        self.exps
            .iter()
            .zip(weights)
            .map(|(&e, &w)| e as i64 * w)
            .sum()
    }
}

impl fmt::Display for Monomial {
    /// Debug rendering (`v0^2*v3`); named-variable output goes through `crate::text`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "v{}", i)?;
            } else {
                write!(f, "v{}^{}", i, e)?;
            }
        }
        Ok(())
    }
}
