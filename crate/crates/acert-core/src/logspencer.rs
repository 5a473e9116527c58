//! Logarithmic derivations of a divisor f, the freeness determinant test,
//! the annihilating operators theta = delta - s·(delta(f)/f), the associated
//! Spencer complex over `D_n[s]`, the module `D[s]/D[s]·theta`, and the formal
//! chain-rule action on f^s.

use crate::homlib::{ChainComplex, PresentedModule};
use crate::monomial::Monomial;
use crate::order::MonomialOrder;
use crate::poly::{comm_syz, exact_divide, CommDivision, CommMatrix, CommPoly, Rational};
use crate::weyl::{RingSignature, WeylElement, WeylMatrix};
use std::collections::BTreeMap;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LogError {
    #[error("divisor must be a nonzero polynomial")]
    ZeroDivisor,
    #[error("expected exactly {expected} derivations, got {got}")]
    WrongCount { expected: usize, got: usize },
    #[error("derivation invariant fails: applying it to f does not give cofactor·f")]
    InvariantViolation,
    #[error("the supplied derivations do not pass the determinant freeness test")]
    NotFree,
    #[error("bracket [{0}, {1}] does not lift through the supplied basis")]
    LiftFailed(usize, usize),
    #[error("bracket closure fails in D[s] for the pair ({0}, {1})")]
    BracketClosureFailed(usize, usize),
    #[error("composition of Spencer differentials is nonzero")]
    CompositionNonzero,
}

/// A divisor: a nonzero polynomial f in Q[x_1..x_n].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divisor {
    pub n: usize,
    pub f: CommPoly,
}

impl Divisor {
    pub fn new(n: usize, f: CommPoly) -> Result<Self, LogError> {
        if f.is_zero() {
            return Err(LogError::ZeroDivisor);
        }
        assert_eq!(f.nvars(), n);
        Ok(Divisor { n, f })
    }

    /// The operator ring `D_n[s]` the logarithmic theory lives in.
    pub fn operator_signature(&self) -> RingSignature {
        RingSignature::new(self.n, 1)
    }
}

/// A vector field delta = sum a_i d_i with delta(f) = cofactor * f.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LogDerivation {
    pub coeffs: Vec<CommPoly>,
    pub cofactor: CommPoly,
}

impl LogDerivation {
    pub fn new(d: &Divisor, coeffs: Vec<CommPoly>, cofactor: CommPoly) -> Result<Self, LogError> {
        let der = LogDerivation { coeffs, cofactor };
        if der.valid_for(d) {
            Ok(der)
        } else {
            Err(LogError::InvariantViolation)
        }
    }

    /// Apply the vector field to a polynomial.
    pub fn apply(&self, g: &CommPoly) -> CommPoly {
        let mut acc = CommPoly::zero(g.nvars());
        for (i, a) in self.coeffs.iter().enumerate() {
            acc = acc.add(&a.mul(&g.derivative(i)));
        }
        acc
    }

    pub fn valid_for(&self, d: &Divisor) -> bool {
        self.apply(&d.f) == self.cofactor.mul(&d.f)
    }

    /// Lie bracket of vector fields, coefficientwise
    /// `[d, e]_k = d(e_k) - e(d_k)`.
    pub fn bracket_coeffs(&self, other: &LogDerivation) -> Vec<CommPoly> {
        (0..self.coeffs.len())
            .map(|k| {
                self.apply(&other.coeffs[k])
                    .sub(&other.apply(&self.coeffs[k]))
            })
            .collect()
    }
}

/// Generators of Der(-log f) from the syzygies of (df/dx_1, .., df/dx_n, f):
/// the last syzygy coordinate, negated, is the cofactor.
pub fn log_derivations(d: &Divisor) -> Vec<LogDerivation> {
    let n = d.n;
    let mut gens: Vec<Vec<CommPoly>> = (0..n).map(|i| vec![d.f.derivative(i)]).collect();
    gens.push(vec![d.f.clone()]);
    let syz = comm_syz(&gens, &MonomialOrder::degrevlex(n));
    (0..syz.rows)
        .map(|row| {
            let r = syz.row(row);
            let der = LogDerivation {
                coeffs: r[..n].to_vec(),
                cofactor: r[n].neg(),
            };
            debug_assert!(der.valid_for(d));
            der
        })
        .collect()
}

/// Determinant freeness test: `n` derivations form a free basis of
/// Der(-log f) iff their coefficient determinant is a nonzero rational
/// multiple of f.
pub fn saito_check(d: &Divisor, basis: &[LogDerivation]) -> Result<bool, LogError> {
    if basis.len() != d.n {
        return Err(LogError::WrongCount {
            expected: d.n,
            got: basis.len(),
        });
    }
    let rows: Vec<Vec<CommPoly>> = basis.iter().map(|b| b.coeffs.clone()).collect();
    let m = CommMatrix::from_rows(d.n, d.n, rows);
    let det = m.determinant();
    if det.is_zero() {
        return Ok(false);
    }
    match exact_divide(&det, &d.f) {
        Ok(q) => Ok(q.is_constant() && !q.is_zero()),
        Err(_) => Ok(false),
    }
}

/// Extract a free basis from a generating set: returns the first size-n
/// subset passing the determinant test, in subset lexicographic order.
pub fn saito_basis(d: &Divisor, gens: &[LogDerivation]) -> Option<Vec<LogDerivation>> {
    if gens.len() < d.n {
        return None;
    }
    for subset in crate::poly::combinations(gens.len(), d.n) {
        let candidate: Vec<LogDerivation> = subset.iter().map(|&i| gens[i].clone()).collect();
        if saito_check(d, &candidate) == Ok(true) {
            return Some(candidate);
        }
    }
    None
}

fn x_poly_to_weyl(sig: RingSignature, p: &CommPoly, extra_var: Option<usize>) -> WeylElement {
    let nv = sig.nvars();
    let mut acc = WeylElement::zero(sig);
    for (m, c) in p.terms() {
        let mut exps = vec![0u32; nv];
        for i in 0..p.nvars() {
            exps[i] = m.exp(i);
        }
        if let Some(v) = extra_var {
            exps[v] += 1;
        }
        acc = acc.add(&WeylElement::term(sig, Monomial::new(exps), c.clone()));
    }
    acc
}

/// theta = sum a_j d_j - cofactor * s, an element of `D_n[s]` annihilating f^s.
pub fn theta_generators(d: &Divisor, ders: &[LogDerivation]) -> Result<Vec<WeylElement>, LogError> {
    let sig = d.operator_signature();
    let mut out = Vec::with_capacity(ders.len());
    for der in ders {
        if der.coeffs.len() != d.n || !der.valid_for(d) {
            return Err(LogError::InvariantViolation);
        }
        let mut theta = WeylElement::zero(sig);
        for (j, a) in der.coeffs.iter().enumerate() {
            theta = theta.add(&x_poly_to_weyl(sig, a, Some(sig.d_index(j + 1))));
        }
        theta = theta.sub(&x_poly_to_weyl(sig, &der.cofactor, Some(sig.s_index(1))));
        out.push(theta);
    }
    Ok(out)
}

/// Bracket structure constants of a free basis: polynomials with
/// `[delta_i, delta_j] = sum_k c[(i,j)][k] delta_k` for i < j, found by
/// lifting against the coefficient matrix and verified by expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureConstants {
    pub n: usize,
    pub table: BTreeMap<(usize, usize), Vec<CommPoly>>,
}

impl StructureConstants {
    pub fn get(&self, i: usize, j: usize) -> &[CommPoly] {
        &self.table[&(i, j)]
    }

    pub fn all_zero(&self) -> bool {
        self.table.values().flatten().all(|c| c.is_zero())
    }
}

pub fn structure_constants(
    d: &Divisor,
    basis: &[LogDerivation],
) -> Result<StructureConstants, LogError> {
    let n = d.n;
    if basis.len() != n {
        return Err(LogError::WrongCount {
            expected: n,
            got: basis.len(),
        });
    }
    let rows: Vec<Vec<CommPoly>> = basis.iter().map(|b| b.coeffs.clone()).collect();
    let division = CommDivision::new(&rows, &MonomialOrder::degrevlex(n));
    let mut table = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let bracket = basis[i].bracket_coeffs(&basis[j]);
            let constants = division.lift(&bracket).ok_or(LogError::LiftFailed(i, j))?;
            // verification by expansion
            let mut recombined = vec![CommPoly::zero(n); n];
            for (k, c) in constants.iter().enumerate() {
                for (l, r) in recombined.iter_mut().enumerate() {
                    *r = r.add(&c.mul(&basis[k].coeffs[l]));
                }
            }
            if recombined != bracket {
                return Err(LogError::LiftFailed(i, j));
            }
            table.insert((i, j), constants);
        }
    }
    Ok(StructureConstants { n, table })
}

/// The Spencer complex of a free basis, with its theta generators, structure
/// constants and verification flags.
#[derive(Clone, Debug)]
pub struct SpencerComplexRecord {
    pub sig: RingSignature,
    pub theta: Vec<WeylElement>,
    pub constants: StructureConstants,
    pub complex: ChainComplex,
    pub composition_zero: bool,
    pub bracket_closure: bool,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::poly::combinations(n, k)
}

fn subset_index(subsets: &[Vec<usize>], s: &[usize]) -> usize {
    subsets
        .iter()
        .position(|t| t == s)
        .expect("subset in canonical enumeration")
}

/// Differential of the Chevalley-Eilenberg-style Spencer complex on the
/// wedge basis of k-subsets (ascending, enumerated lexicographically):
///
/// ```text
/// d(1 ⊗ θ_S) = Σ_t (-1)^(t-1) θ_(S_t) ⊗ θ_(S∖S_t)
///            + Σ_(t<u) (-1)^(t+u) c_(S_t,S_u)^m ⊗ θ_m ∧ θ_(S∖{S_t,S_u})
/// ```
///
/// with 1-based positions t, u and O-coefficients absorbed into the left
/// factor. These are the signs that make the composite vanish; the base case
/// is `d(1 ⊗ θ) = θ`.
fn spencer_differential(
    sig: RingSignature,
    theta: &[WeylElement],
    constants: &StructureConstants,
    n: usize,
    k: usize,
) -> WeylMatrix {
    let source = subsets(n, k);
    let target = subsets(n, k - 1);
    let mut rows = Vec::with_capacity(source.len());
    for s in &source {
        let mut row = vec![WeylElement::zero(sig); target.len()];
        // contraction sum
        for (t, &st) in s.iter().enumerate() {
            let rest: Vec<usize> = s.iter().copied().filter(|&v| v != st).collect();
            let col = subset_index(&target, &rest);
            let signed = if t % 2 == 0 {
                theta[st].clone()
            } else {
                theta[st].neg()
            };
            row[col] = row[col].add(&signed);
        }
        // bracket sum
        for t in 0..s.len() {
            for u in t + 1..s.len() {
                let (i, j) = (s[t], s[u]);
                let rest: Vec<usize> = s.iter().copied().filter(|&v| v != i && v != j).collect();
                let pair_sign = (t + 1 + u + 1) % 2 == 0;
                for (m, c) in constants.get(i, j).iter().enumerate() {
                    if c.is_zero() || rest.contains(&m) {
                        continue;
                    }
                    let mut wedge = rest.clone();
                    let pos = wedge.iter().filter(|&&v| v < m).count();
                    wedge.insert(pos, m);
                    let col = subset_index(&target, &wedge);
                    let mut coeff = x_poly_to_weyl(sig, c, None);
                    let negative = !pair_sign ^ (pos % 2 == 1);
                    if negative {
                        coeff = coeff.neg();
                    }
                    row[col] = row[col].add(&coeff);
                }
            }
        }
        rows.push(row);
    }
    WeylMatrix::from_rows(sig, target.len(), rows)
}

/// Assemble and verify the Spencer complex for a free basis: slot ranks
/// binomial(n, k) for k = n..0, brackets of the theta generators checked to
/// close over the structure constants, and the composite checked to vanish.
pub fn spencer_complex(
    d: &Divisor,
    basis: &[LogDerivation],
) -> Result<SpencerComplexRecord, LogError> {
    let n = d.n;
    if !saito_check(d, basis)? {
        return Err(LogError::NotFree);
    }
    let constants = structure_constants(d, basis)?;
    let theta = theta_generators(d, basis)?;
    let sig = d.operator_signature();

    // bracket closure in D[s]: [theta_i, theta_j] = sum_k c_ij^k theta_k
    for i in 0..n {
        for j in i + 1..n {
            let lhs = theta[i].bracket(&theta[j]);
            let mut rhs = WeylElement::zero(sig);
            for (k, c) in constants.get(i, j).iter().enumerate() {
                rhs = rhs.add(&x_poly_to_weyl(sig, c, None).mul(&theta[k]));
            }
            if lhs != rhs {
                return Err(LogError::BracketClosureFailed(i, j));
            }
        }
    }

    let diffs: Vec<WeylMatrix> = (1..=n)
        .map(|k| spencer_differential(sig, &theta, &constants, n, k))
        .collect();
    let complex = ChainComplex::free(sig, 1, diffs);
    if !complex.is_complex() {
        return Err(LogError::CompositionNonzero);
    }
    Ok(SpencerComplexRecord {
        sig,
        theta,
        constants,
        complex,
        composition_zero: true,
        bracket_closure: true,
    })
}

/// The module `D_n[s] / D_n[s]·theta_f(s)` presented on the theta generators of
/// any generating set of derivations.
pub fn mflog(d: &Divisor, ders: &[LogDerivation]) -> Result<PresentedModule, LogError> {
    let theta = theta_generators(d, ders)?;
    let sig = d.operator_signature();
    Ok(PresentedModule::cyclic(sig, &theta))
}

/// `(g / f^k) · f^s`, in canonical form: f does not divide g unless k = 0.
/// The numerator lives in Q[x_1..x_n, s] with s last.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FsElement {
    pub numerator: CommPoly,
    pub pole: u32,
}

impl FsElement {
    pub fn new(d: &Divisor, numerator: CommPoly, pole: u32) -> Self {
        assert_eq!(numerator.nvars(), d.n + 1);
        let mut e = FsElement { numerator, pole };
        e.canonicalize(d);
        e
    }

    /// The symbol f^s itself.
    pub fn fs(d: &Divisor) -> Self {
        FsElement {
            numerator: CommPoly::one(d.n + 1),
            pole: 0,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_zero()
    }

    fn canonicalize(&mut self, d: &Divisor) {
        if self.numerator.is_zero() {
            self.pole = 0;
            return;
        }
        let f = embed_f(d);
        while self.pole > 0 {
            match exact_divide(&self.numerator, &f) {
                Ok(q) => {
                    self.numerator = q;
                    self.pole -= 1;
                }
                Err(_) => break,
            }
        }
    }
}

/// f viewed in the numerator ring Q[x, s].
fn embed_f(d: &Divisor) -> CommPoly {
    let map: Vec<usize> = (0..d.n).collect();
    d.f.embed(d.n + 1, &map)
}

/// The module action of `A = D_n[s]` on `O[s, 1/f]·f^s` by the chain rule:
/// x and s act by multiplication; d_i sends (g, k) to
/// (f·d_i(g) - k·g·d_i(f) + s·g·d_i(f), k + 1).
pub fn act_on_fs(p: &WeylElement, v: &FsElement, d: &Divisor) -> FsElement {
    let sig = p.signature();
    assert_eq!(sig, d.operator_signature());
    let n = d.n;
    let nv = d.n + 1;
    let f = embed_f(d);
    let s_poly = CommPoly::var(nv, n);
    let mut acc = FsElement {
        numerator: CommPoly::zero(nv),
        pole: 0,
    };
    for (mon, coef) in p.terms() {
        let mut cur = v.clone();
        // s^c then d^b then x^a, matching the normally ordered term
        let s_pow = mon.exp(sig.s_index(1));
        if s_pow > 0 {
            cur.numerator = cur.numerator.mul(&s_poly.pow(s_pow));
        }
        for i in 0..n {
            let fi = embed_f_derivative(d, i);
            for _ in 0..mon.exp(sig.d_index(i + 1)) {
                let g = &cur.numerator;
                let k = Rational::from_integer(cur.pole.into());
                let term = f
                    .mul(&g.derivative(i))
                    .sub(&g.mul(&fi).scale(&k))
                    .add(&s_poly.mul(g).mul(&fi));
                cur = FsElement::new(d, term, cur.pole + 1);
            }
        }
        let mut xmul = CommPoly::one(nv);
        for i in 0..n {
            let e = mon.exp(sig.x_index(i + 1));
            if e > 0 {
                xmul = xmul.mul(&CommPoly::var(nv, i).pow(e));
            }
        }
        cur.numerator = cur.numerator.mul(&xmul).scale(coef);
        acc = add_fs(d, &acc, &cur);
    }
    acc
}

fn embed_f_derivative(d: &Divisor, i: usize) -> CommPoly {
    let map: Vec<usize> = (0..d.n).collect();
    d.f.derivative(i).embed(d.n + 1, &map)
}

fn add_fs(d: &Divisor, a: &FsElement, b: &FsElement) -> FsElement {
    let f = embed_f(d);
    let k = a.pole.max(b.pole);
    let scale = |e: &FsElement| -> CommPoly {
        let mut g = e.numerator.clone();
        for _ in e.pole..k {
            g = g.mul(&f);
        }
        g
    };
    FsElement::new(d, scale(a).add(&scale(b)), k)
}
