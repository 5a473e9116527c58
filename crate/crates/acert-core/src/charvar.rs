//! The relative order filtration (x and s in weight 0, d in weight 1),
//! associated-graded presentations over Q[x, xi, s], characteristic-ideal
//! dimensions, O_X-support dimension, and grade computed on the commutative
//! side.
//!
//! The graded ring shares the Weyl exponent layout: xi_i is the symbol of d_i
//! at position n + i. Radicals are never formed; every consumer below is
//! radical-invariant, and the zeroth Fitting ideal stands in for the
//! annihilator of a presented module (same radical, so same dimensions).

use crate::homlib::PresentedModule;
use crate::poly::{fitting0, ideal_dim, CommMatrix, CommPoly};
use crate::weyl::{left_gb, RingSignature, WeylElement};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CharVarError {
    #[error("the zero module has no grade")]
    ZeroModule,
}

/// Commutative presentation of gr M over Q[x_1..x_n, xi_1..xi_n, s_1..s_r].
#[derive(Clone, Debug)]
pub struct GradedPresentation {
    pub sig: RingSignature,
    pub gens: usize,
    /// rows are relations (initial forms of a Gröbner basis of the relation
    /// module under the weight-refined order)
    pub relations: CommMatrix,
}

fn order_weights(sig: RingSignature) -> Vec<i64> {
    let mut w = vec![0i64; sig.nvars()];
    for e in w.iter_mut().take(2 * sig.n).skip(sig.n) {
        *e = 1;
    }
    w
}

/// Initial form of a relation row: the terms of maximal filtration weight,
/// read as a commutative row (d -> xi is the identity on exponents).
fn initial_form_row(sig: RingSignature, row: &[WeylElement]) -> Vec<CommPoly> {
    let weights = order_weights(sig);
    let nvars = sig.nvars();
    let top = row
        .iter()
        .flat_map(|e| e.terms())
        .map(|(m, _)| m.weighted_degree(&weights))
        .max();
    let Some(top) = top else {
        return vec![CommPoly::zero(nvars); row.len()];
    };
    row.iter()
        .map(|e| {
            let mut acc = CommPoly::zero(nvars);
            for (m, c) in e.terms() {
                if m.weighted_degree(&weights) == top {
                    acc = acc.add(&CommPoly::term(nvars, m.clone(), c.clone()));
                }
            }
            acc
        })
        .collect()
}

/// Associated graded presentation with the good filtration induced by the
/// standard generators (zero shifts): Gröbner relations under the
/// weight-refined order, then initial forms.
pub fn gr_presentation(m: &PresentedModule) -> GradedPresentation {
    let sig = m.signature();
    let nvars = sig.nvars();
    let rows: Vec<Vec<WeylElement>> = (0..m.relations().rows())
        .map(|i| m.relations().row(i))
        .collect();
    let order = crate::order::MonomialOrder::weyl_order_weighted(sig.n, sig.r);
    let gb = if rows.is_empty() {
        Vec::new()
    } else {
        left_gb(&rows, &order)
    };
    let comm_rows: Vec<Vec<CommPoly>> = gb.iter().map(|row| initial_form_row(sig, row)).collect();
    GradedPresentation {
        sig,
        gens: m.gens(),
        relations: CommMatrix::from_rows(nvars, m.gens(), comm_rows),
    }
}

/// Generators of the characteristic ideal of the graded presentation: the
/// initial ideal itself for cyclic modules, the zeroth Fitting ideal
/// otherwise.
pub fn characteristic_ideal(gr: &GradedPresentation) -> Vec<CommPoly> {
    if gr.gens == 1 {
        (0..gr.relations.rows)
            .map(|i| gr.relations.entry(i, 0).clone())
            .filter(|p| !p.is_zero())
            .collect()
    } else {
        fitting0(&gr.relations)
    }
}

/// Dimension of the characteristic variety in T*X × Spec R; -1 iff M = 0.
pub fn ch_dim(m: &PresentedModule) -> i64 {
    let sig = m.signature();
    if m.gens() == 0 {
        return -1;
    }
    let gr = gr_presentation(m);
    let ideal = characteristic_ideal(&gr);
    ideal_dim(&ideal, sig.nvars())
}

/// Dimension of the closure of the projection of the characteristic variety
/// to X: eliminate the xi- and s-variables and measure in `Q[x]`; -1 iff M = 0.
pub fn ox_support_dim(m: &PresentedModule) -> i64 {
    let sig = m.signature();
    if m.gens() == 0 {
        return -1;
    }
    let gr = gr_presentation(m);
    let ideal = characteristic_ideal(&gr);
    let n = sig.n;
    let nvars = sig.nvars();
    let drop: Vec<usize> = (n..nvars).collect();
    let eliminated = crate::poly::eliminate(&ideal, nvars, &drop);
    let keep: Vec<usize> = (0..n).collect();
    let restricted: Vec<CommPoly> = eliminated.iter().map(|p| restrict_vars(p, &keep)).collect();
    ideal_dim(&restricted, n)
}

/// Rebuild a polynomial in the subring of the listed variables; panics if a
/// term involves any other variable (callers eliminate those first).
fn restrict_vars(p: &CommPoly, keep: &[usize]) -> CommPoly {
    let mut out = CommPoly::zero(keep.len());
    for (m, c) in p.terms() {
        let mut exps = vec![0u32; keep.len()];
        for (slot, &v) in keep.iter().enumerate() {
            exps[slot] = m.exp(v);
        }
        let total: u32 = exps.iter().sum();
        assert_eq!(
            total,
            m.total_degree(),
            "term involves an eliminated variable"
        );
        out = out.add(&CommPoly::term(
            keep.len(),
            crate::monomial::Monomial::new(exps),
            c.clone(),
        ));
    }
    out
}

/// Grade read off the commutative side: 2n + r - dim Ch(M); must agree with
/// the Ext-scan grade for every nonzero module.
pub fn grade_via_gr(m: &PresentedModule) -> Result<usize, CharVarError> {
    if m.is_zero() {
        return Err(CharVarError::ZeroModule);
    }
    let sig = m.signature();
    let total = (2 * sig.n + sig.r) as i64;
    let dim = ch_dim(m);
    Ok((total - dim) as usize)
}

/// The three commutative invariants in one pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharDimReport {
    pub ch_dim: i64,
    pub ox_support_dim: i64,
    /// None for the zero module.
    pub grade_via_gr: Option<usize>,
}

pub fn char_report(m: &PresentedModule) -> CharDimReport {
    let ch = ch_dim(m);
    let ox = ox_support_dim(m);
    let g = if m.is_zero() {
        None
    } else {
        let sig = m.signature();
        Some(((2 * sig.n + sig.r) as i64 - ch) as usize)
    };
    CharDimReport {
        ch_dim: ch,
        ox_support_dim: ox,
        grade_via_gr: g,
    }
}
