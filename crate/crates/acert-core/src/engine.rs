//! Left Gröbner kernel shared by the commutative and Weyl rings.
//!
//! Both rings have the PBW leading-term property (the leading monomial of a
//! product is the product of leading monomials under any term well-order), so
//! one Buchberger loop serves both; only term-by-vector multiplication
//! differs. Syzygies and lifting go through the extended-module elimination
//! construction: compute a Gröbner basis of `{(g_i, e_i)}` under an order in
//! which the original components dominate the tracking components.

use crate::guard;
use crate::monomial::Monomial;
use crate::mvec::MVec;
use crate::order::{ModuleOrder, MonomialOrder};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use std::cmp::Ordering;

/// Left multiplication of module elements by a single term of the ring.
pub trait TermMul {
    fn nvars(&self) -> usize;

    /// `coef * mon * v`, normal ordered.
    fn term_mul(&self, coef: &BigRational, mon: &Monomial, v: &MVec) -> MVec;

    /// Whether Buchberger's coprimality criterion is sound here. Only true
    /// for the commutative ring, and even then only applied to rank-1 input.
    fn commutative(&self) -> bool;
}

/// Commutative polynomial multiplication: exponents add.
#[derive(Clone, Debug)]
pub struct CommMul {
    pub nvars: usize,
}

impl TermMul for CommMul {
    fn nvars(&self) -> usize {
        self.nvars
    }

    fn term_mul(&self, coef: &BigRational, mon: &Monomial, v: &MVec) -> MVec {
        MVec::from_terms(v.terms().map(|((c, m), q)| ((*c, mon.mul(m)), coef * q)))
    }

    fn commutative(&self) -> bool {
        true
    }
}

/// Relative Weyl algebra multiplication with exponent layout
/// `[x_1..x_n | d_1..d_n | s_1..s_r]`. The s-variables are central; each
/// `(x_i, d_i)` pair satisfies `d_i x_i = x_i d_i + 1`, giving the Leibniz
/// expansion `d^m x^p = sum_k C(m,k) C(p,k) k! x^(p-k) d^(m-k)` per pair.
#[derive(Clone, Debug)]
pub struct WeylMul {
    pub n: usize,
    pub r: usize,
}

impl TermMul for WeylMul {
    fn nvars(&self) -> usize {
        2 * self.n + self.r
    }

    fn term_mul(&self, coef: &BigRational, mon: &Monomial, v: &MVec) -> MVec {
        let n = self.n;
        let nv = self.nvars();
        let alpha = &mon.exps()[0..n];
        let beta = &mon.exps()[n..2 * n];
        let gamma = &mon.exps()[2 * n..];
        let mut out = MVec::zero();
        for ((comp, vm), vc) in v.terms() {
            let a = &vm.exps()[0..n];
            let b = &vm.exps()[n..2 * n];
            let c = &vm.exps()[2 * n..];
            let kmax: Vec<u32> = beta.iter().zip(a).map(|(x, y)| *x.min(y)).collect();
            let mut k = vec![0u32; n];
            loop {
                let mut w = BigInt::one();
                for i in 0..n {
                    if k[i] > 0 {
                        w *= binom(beta[i], k[i]) * binom(a[i], k[i]) * factorial(k[i]);
                    }
                }
                let mut exps = vec![0u32; nv];
                for i in 0..n {
                    exps[i] = alpha[i] + a[i] - k[i];
                    exps[n + i] = beta[i] + b[i] - k[i];
                }
                for j in 0..self.r {
                    exps[2 * n + j] = gamma[j] + c[j];
                }
                out.add_term(
                    *comp,
                    Monomial::new(exps),
                    coef * vc * BigRational::from_integer(w),
                );
                // odometer over 0 <= k <= kmax
                let mut i = 0;
                loop {
                    if i == n {
                        break;
                    }
                    if k[i] < kmax[i] {
                        k[i] += 1;
                        break;
                    }
                    k[i] = 0;
                    i += 1;
                }
                if i == n {
                    break;
                }
            }
        }
        out
    }

    fn commutative(&self) -> bool {
        false
    }
}

fn binom(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

fn factorial(k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=k {
        acc *= BigInt::from(i);
    }
    acc
}

type Lead = ((u32, Monomial), BigRational);

fn lead_of(v: &MVec, order: &ModuleOrder) -> Lead {
    let (t, c) = v.leading(order).expect("lead of zero vector");
    (t.clone(), c.clone())
}

/// Full left normal form: no term of the result is divisible by any basis
/// lead. Reduction is deterministic (first dividing basis element wins).
pub fn normal_form<R: TermMul>(ring: &R, v: &MVec, basis: &[MVec], order: &ModuleOrder) -> MVec {
    normal_form_inner(ring, v, basis, &prepare_leads(basis, order), order, None)
}

/// Normal form with left cofactors: returns `(nf, q)` with
/// `v = sum_i q_i * basis_i + nf`.
pub fn normal_form_with_cofactors<R: TermMul>(
    ring: &R,
    v: &MVec,
    basis: &[MVec],
    order: &ModuleOrder,
) -> (MVec, Vec<MVec>) {
    let mut cof = vec![MVec::zero(); basis.len()];
    let nf = normal_form_inner(
        ring,
        v,
        basis,
        &prepare_leads(basis, order),
        order,
        Some(&mut cof),
    );
    (nf, cof)
}

fn prepare_leads(basis: &[MVec], order: &ModuleOrder) -> Vec<Lead> {
    basis.iter().map(|g| lead_of(g, order)).collect()
}

fn normal_form_inner<R: TermMul>(
    ring: &R,
    v: &MVec,
    basis: &[MVec],
    leads: &[Lead],
    order: &ModuleOrder,
    mut cofactors: Option<&mut Vec<MVec>>,
) -> MVec {
    let mut work = v.clone();
    let mut rem = MVec::zero();
    while !work.is_zero() {
        // degree 0: only the deadline can trip mid-reduction
        guard::check(0);
        let ((comp, mon), coef) = {
            let (t, c) = work.leading(order).unwrap();
            (t.clone(), c.clone())
        };
        let mut reduced = false;
        for (i, ((gc, gm), glc)) in leads.iter().enumerate() {
            if *gc == comp && gm.divides(&mon) {
                let t = gm.quotient_into(&mon);
                let factor = &coef / glc;
                let prod = ring.term_mul(&factor, &t, &basis[i]);
                work.sub_assign(&prod);
                if let Some(cof) = cofactors.as_deref_mut() {
                    cof[i].add_term(0, t, factor);
                }
                reduced = true;
                break;
            }
        }
        if !reduced {
            rem.add_term(comp, mon.clone(), coef.clone());
            work.add_term(comp, mon, -coef);
        }
    }
    rem
}

struct Pair {
    i: usize,
    j: usize,
    comp: u32,
    lcm: Monomial,
}

/// Buchberger with the normal selection strategy (smallest lcm first, ties by
/// index pair). Returns the unique reduced, monic Gröbner basis, sorted by
/// ascending leading term.
pub fn groebner<R: TermMul>(ring: &R, gens: &[MVec], order: &ModuleOrder) -> Vec<MVec> {
    let rank1 = gens
        .iter()
        .flat_map(|g| g.terms())
        .all(|((c, _), _)| *c == 0);
    let product_criterion = ring.commutative() && rank1;

    let mut basis: Vec<MVec> = Vec::new();
    let mut leads: Vec<Lead> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let admit = |g: MVec, basis: &mut Vec<MVec>, leads: &mut Vec<Lead>, pairs: &mut Vec<Pair>| {
        let g = g.primitive(order);
        if g.is_zero() {
            return;
        }
        guard::check(g.total_degree());
        let lead = lead_of(&g, order);
        let j = basis.len();
        for (i, ((ic, im), _)) in leads.iter().enumerate() {
            if *ic == lead.0 .0 {
                if product_criterion && im.coprime(&lead.0 .1) {
                    continue;
                }
                pairs.push(Pair {
                    i,
                    j,
                    comp: *ic,
                    lcm: im.lcm(&lead.0 .1),
                });
            }
        }
        basis.push(g);
        leads.push(lead);
    };

    for g in gens {
        admit(g.clone(), &mut basis, &mut leads, &mut pairs);
    }

    while !pairs.is_empty() {
        // normal strategy: smallest lcm under the order, ties by (i, j)
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k];
            let b = &pairs[best];
            let c = order
                .cmp_term(&(a.comp, a.lcm.clone()), &(b.comp, b.lcm.clone()))
                .then_with(|| a.i.cmp(&b.i).then(a.j.cmp(&b.j)));
            if c == Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let ((_, ui), ci) = &leads[pair.i];
        let ((_, uj), cj) = &leads[pair.j];
        let ti = ui.quotient_into(&pair.lcm);
        let tj = uj.quotient_into(&pair.lcm);
        let left = ring.term_mul(&ci.recip(), &ti, &basis[pair.i]);
        let right = ring.term_mul(&cj.recip(), &tj, &basis[pair.j]);
        let spair = left.sub(&right);
        let h = normal_form_inner(ring, &spair, &basis, &leads, order, None);
        admit(h, &mut basis, &mut leads, &mut pairs);
    }

    interreduce(ring, basis, order)
}

/// Minimalize and tail-reduce a Gröbner basis; monic output sorted by lead.
fn interreduce<R: TermMul>(ring: &R, basis: Vec<MVec>, order: &ModuleOrder) -> Vec<MVec> {
    let mut with_leads: Vec<(MVec, Lead)> = basis
        .into_iter()
        .filter(|g| !g.is_zero())
        .map(|g| {
            let l = lead_of(&g, order);
            (g, l)
        })
        .collect();
    with_leads.sort_by(|(a, la), (b, lb)| {
        order
            .cmp_term(&la.0, &lb.0)
            .then_with(|| a.num_terms().cmp(&b.num_terms()))
            .then_with(|| a.cmp_storage(b))
    });
    // minimal: drop anything whose lead is divisible by an earlier kept lead
    let mut kept: Vec<(MVec, Lead)> = Vec::new();
    'next: for (g, lead) in with_leads {
        for (_, ((kc, km), _)) in &kept {
            if *kc == lead.0 .0 && km.divides(&lead.0 .1) {
                continue 'next;
            }
        }
        kept.push((g, lead));
    }
    // tail-reduce each against the others
    let n = kept.len();
    let mut out: Vec<MVec> = Vec::with_capacity(n);
    for i in 0..n {
        let others: Vec<MVec> = kept
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, (g, _))| g.clone())
            .collect();
        let red = normal_form(ring, &kept[i].0, &others, order);
        out.push(red.monic(order));
    }
    out.retain(|g| !g.is_zero());
    out.sort_by(|a, b| {
        let la = lead_of(a, order);
        let lb = lead_of(b, order);
        order.cmp_term(&la.0, &lb.0)
    });
    out
}

impl MVec {
    /// Arbitrary but deterministic tie-break comparison on raw storage.
    fn cmp_storage(&self, other: &MVec) -> Ordering {
        let mut a = self.terms();
        let mut b = other.terms();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((ta, ca)), Some((tb, cb))) => {
                    let c = ta.cmp(tb).then_with(|| ca.cmp(cb));
                    if c != Ordering::Equal {
                        return c;
                    }
                }
            }
        }
    }
}

/// Gröbner basis of `{(g_i, e_i)}` under a block-dominance order: the
/// original rank-`split` components dominate one tracking component per
/// generator. Yields the span's Gröbner basis, the syzygy module, and exact
/// left division by the original generators.
pub struct ExtendedGb {
    split: u32,
    ngens: usize,
    order: ModuleOrder,
    elems: Vec<MVec>,
}

pub fn extended_groebner<R: TermMul>(
    ring: &R,
    gens: &[MVec],
    rank: u32,
    mon: MonomialOrder,
) -> ExtendedGb {
    let order = ModuleOrder::split(mon, rank);
    let nvars = ring.nvars();
    let tracked: Vec<MVec> = gens
        .iter()
        .enumerate()
        .map(|(i, g)| {
            let mut h = g.clone();
            h.add_term(rank + i as u32, Monomial::one(nvars), BigRational::one());
            h
        })
        .collect();
    let elems = groebner(ring, &tracked, &order);
    ExtendedGb {
        split: rank,
        ngens: gens.len(),
        order,
        elems,
    }
}

impl ExtendedGb {
    /// Generators of the left syzygy module of the original vectors
    /// (one row per syzygy, rank = number of generators).
    pub fn syzygy_rows(&self) -> Vec<MVec> {
        self.elems
            .iter()
            .filter(|h| h.project(0, self.split).is_zero())
            .map(|h| h.project(self.split, self.split + self.ngens as u32))
            .collect()
    }

    /// Gröbner basis of the span of the original vectors.
    pub fn span_gb(&self) -> Vec<MVec> {
        self.elems
            .iter()
            .filter(|h| !h.project(0, self.split).is_zero())
            .map(|h| h.project(0, self.split))
            .collect()
    }

    /// Express `v` as a left combination of the original generators, if it
    /// lies in their span: returns `a` with `sum_i a_i * g_i = v`.
    pub fn lift<R: TermMul>(&self, ring: &R, v: &MVec) -> Option<MVec> {
        let nf = normal_form(ring, v, &self.elems, &self.order);
        if nf.project(0, self.split).is_zero() {
            Some(nf.project(self.split, self.split + self.ngens as u32).neg())
        } else {
            None
        }
    }

    /// Membership of `v` in the span of the original generators.
    pub fn contains<R: TermMul>(&self, ring: &R, v: &MVec) -> bool {
        self.lift(ring, v).is_some()
    }
}
