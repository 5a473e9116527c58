//! Sparse elements of free modules: the common currency of both term engines.

use crate::monomial::Monomial;
use crate::order::ModuleOrder;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// An element of a free module A^rank with sparse terms
/// `(component, monomial) -> coefficient`. Rank is contextual; components are
/// not bounds-checked here.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct MVec {
    terms: BTreeMap<(u32, Monomial), BigRational>,
}

impl MVec {
    pub fn zero() -> Self {
        MVec {
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = ((u32, Monomial), BigRational)>>(it: I) -> Self {
        let mut v = MVec::zero();
        for ((c, m), q) in it {
            v.add_term(c, m, q);
        }
        v
    }

    /// The standard basis vector `e_comp`.
    pub fn unit(nvars: usize, comp: u32) -> Self {
        let mut v = MVec::zero();
        v.add_term(comp, Monomial::one(nvars), BigRational::one());
        v
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(u32, Monomial), &BigRational)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = ((u32, Monomial), BigRational)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, comp: u32, mon: &Monomial) -> BigRational {
        self.terms
            .get(&(comp, mon.clone()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn add_term(&mut self, comp: u32, mon: Monomial, coef: BigRational) {
        if coef.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry((comp, mon)) {
            Entry::Vacant(e) => {
                e.insert(coef);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &coef;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_assign(&mut self, other: &MVec) {
        for ((c, m), q) in &other.terms {
            self.add_term(*c, m.clone(), q.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &MVec) {
        for ((c, m), q) in &other.terms {
            self.add_term(*c, m.clone(), -q.clone());
        }
    }

    pub fn add(&self, other: &MVec) -> MVec {
        let mut v = self.clone();
        v.add_assign(other);
        v
    }

    pub fn sub(&self, other: &MVec) -> MVec {
        let mut v = self.clone();
        v.sub_assign(other);
        v
    }

    pub fn neg(&self) -> MVec {
        MVec {
            terms: self
                .terms
                .iter()
                .map(|(k, q)| (k.clone(), -q.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> MVec {
        if c.is_zero() {
            return MVec::zero();
        }
        MVec {
            terms: self.terms.iter().map(|(k, q)| (k.clone(), q * c)).collect(),
        }
    }

    /// Leading term under the given module order.
    pub fn leading(&self, order: &ModuleOrder) -> Option<(&(u32, Monomial), &BigRational)> {
        self.terms
            .iter()
            .max_by(|(a, _), (b, _)| order.cmp_term(a, b))
    }

    /// Total degree of the largest term (0 for the zero vector).
    pub fn total_degree(&self) -> u32 {
        self.terms
            .keys()
            .map(|(_, m)| m.total_degree())
            .max()
            .unwrap_or(0)
    }

    /// Keep only components in `lo..hi`, shifting them down by `lo`.
    pub fn project(&self, lo: u32, hi: u32) -> MVec {
        MVec {
            terms: self
                .terms
                .iter()
                .filter(|((c, _), _)| *c >= lo && *c < hi)
                .map(|((c, m), q)| ((*c - lo, m.clone()), q.clone()))
                .collect(),
        }
    }

    /// Shift all components up by `by`.
    pub fn shift(&self, by: u32) -> MVec {
        MVec {
            terms: self
                .terms
                .iter()
                .map(|((c, m), q)| ((*c + by, m.clone()), q.clone()))
                .collect(),
        }
    }

    /// Divide by the leading coefficient.
    pub fn monic(&self, order: &ModuleOrder) -> MVec {
        match self.leading(order) {
            None => MVec::zero(),
            Some((_, lc)) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    /// Clear denominators and content; make the leading coefficient positive.
    /// Keeps intermediate Buchberger vectors small without changing the span.
    pub fn primitive(&self, order: &ModuleOrder) -> MVec {
        if self.is_zero() {
            return MVec::zero();
        }
        let mut denom_lcm = BigInt::one();
        for q in self.terms.values() {
            denom_lcm = denom_lcm.lcm(q.denom());
        }
        let mut content = BigInt::zero();
        for q in self.terms.values() {
            let int = q.numer() * &denom_lcm / q.denom();
            content = content.gcd(&int);
        }
        if content.is_zero() {
            return MVec::zero();
        }
        let mut scale = BigRational::new(denom_lcm, content);
        if self
            .leading(order)
            .map(|(_, lc)| lc.is_negative())
            .unwrap_or(false)
        {
            scale = -scale;
        }
        self.scale(&scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::MonomialOrder;

    #[test]
    fn add_cancels() {
        let m = Monomial::new(vec![1, 0]);
        let mut a = MVec::zero();
        a.add_term(0, m.clone(), BigRational::one());
        a.add_term(0, m.clone(), -BigRational::one());
        assert!(a.is_zero());
    }

    #[test]
    fn primitive_normalizes() {
        let order = ModuleOrder::top(MonomialOrder::degrevlex(1));
        let mut a = MVec::zero();
        a.add_term(
            0,
            Monomial::new(vec![1]),
            BigRational::new(4.into(), 6.into()),
        );
        a.add_term(
            0,
            Monomial::new(vec![0]),
            BigRational::new((-2).into(), 3.into()),
        );
        let p = a.primitive(&order);
        let lead = p.leading(&order).unwrap();
        assert_eq!(*lead.1, BigRational::one());
        assert_eq!(p.coeff(0, &Monomial::new(vec![0])), -BigRational::one());
    }
}
