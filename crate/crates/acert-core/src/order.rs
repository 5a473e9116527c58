//! Term orders on monomials and their extensions to free modules.

use crate::monomial::Monomial;
use std::cmp::Ordering;

/// A term well-order on monomials. Every variant compares total orders that
/// are multiplicative and have 1 as the least monomial, so each is admissible
/// for the Weyl engine as well (commutator corrections strictly divide the
/// leading product monomial).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Lexicographic along the given variable sequence (first entry strongest).
    Lex { seq: Vec<usize> },
    /// Total degree over `seq`, ties by reverse lexicographic along `seq`.
    DegRevLex { seq: Vec<usize> },
    /// Weighted degree first, then the tie-break order.
    Weighted {
        weights: Vec<i64>,
        tie: Box<MonomialOrder>,
    },
    /// Elimination order: compare degrevlex on `first`, then degrevlex on `rest`.
    Block { first: Vec<usize>, rest: Vec<usize> },
}

impl MonomialOrder {
    pub fn lex(nvars: usize) -> Self {
        MonomialOrder::Lex {
            seq: (0..nvars).collect(),
        }
    }

    pub fn degrevlex(nvars: usize) -> Self {
        MonomialOrder::DegRevLex {
            seq: (0..nvars).collect(),
        }
    }

    /// Default order for the relative Weyl algebra with exponent layout
    /// `[x_1..x_n | d_1..d_n | s_1..s_r]`: degrevlex on total degree with
    /// d > x > s among variables of equal degree.
    pub fn weyl_default(n: usize, r: usize) -> Self {
        let mut seq: Vec<usize> = (n..2 * n).collect();
        seq.extend(0..n);
        seq.extend(2 * n..2 * n + r);
        MonomialOrder::DegRevLex { seq }
    }

    /// Order-filtration refinement: weight 1 on each d-variable, 0 elsewhere,
    /// ties by the default Weyl order.
    pub fn weyl_order_weighted(n: usize, r: usize) -> Self {
        let mut weights = vec![0i64; 2 * n + r];
        for w in weights.iter_mut().take(2 * n).skip(n) {
            *w = 1;
        }
        MonomialOrder::Weighted {
            weights,
            tie: Box::new(Self::weyl_default(n, r)),
        }
    }

    /// Elimination order dropping the variables in `drop` (compared first).
    pub fn elimination(nvars: usize, drop: &[usize]) -> Self {
        let dropped: Vec<usize> = (0..nvars).filter(|v| drop.contains(v)).collect();
        let kept: Vec<usize> = (0..nvars).filter(|v| !drop.contains(v)).collect();
        MonomialOrder::Block {
            first: dropped,
            rest: kept,
        }
    }

    pub fn cmp_mon(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex { seq } => {
                for &v in seq {
                    match a.exp(v).cmp(&b.exp(v)) {
                        Ordering::Equal => continue,
                        o => return o,
                    }
                }
                Ordering::Equal
            }
            MonomialOrder::DegRevLex { seq } => degrevlex_on(seq, a, b),
            MonomialOrder::Weighted { weights, tie } => {
                match a.weighted_degree(weights).cmp(&b.weighted_degree(weights)) {
                    Ordering::Equal => tie.cmp_mon(a, b),
                    o => o,
                }
            }
            MonomialOrder::Block { first, rest } => match degrevlex_on(first, a, b) {
                Ordering::Equal => degrevlex_on(rest, a, b),
                o => o,
            },
        }
    }
}

fn degrevlex_on(seq: &[usize], a: &Monomial, b: &Monomial) -> Ordering {
    let da: u32 = seq.iter().map(|&v| a.exp(v)).sum();
    let db: u32 = seq.iter().map(|&v| b.exp(v)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    for &v in seq.iter().rev() {
        match a.exp(v).cmp(&b.exp(v)) {
            Ordering::Equal => continue,
            // smaller exponent in the latest position wins
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

/// Extension of a monomial order to terms of a free module.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModuleStyle {
    /// Compare monomials first; lower component index breaks ties (is greater).
    TermOverPosition,
    /// Compare component first (lower index greater), then the monomial.
    PositionOverTerm,
    /// Components below `split` dominate all components at or above it;
    /// term-over-position inside each side. Used for syzygy elimination.
    BlockSplit { split: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mon: MonomialOrder,
    pub style: ModuleStyle,
}

impl ModuleOrder {
    pub fn top(mon: MonomialOrder) -> Self {
        ModuleOrder {
            mon,
            style: ModuleStyle::TermOverPosition,
        }
    }

    pub fn pot(mon: MonomialOrder) -> Self {
        ModuleOrder {
            mon,
            style: ModuleStyle::PositionOverTerm,
        }
    }

    pub fn split(mon: MonomialOrder, split: u32) -> Self {
        ModuleOrder {
            mon,
            style: ModuleStyle::BlockSplit { split },
        }
    }

    pub fn cmp_term(&self, a: &(u32, Monomial), b: &(u32, Monomial)) -> Ordering {
        match &self.style {
            ModuleStyle::TermOverPosition => {
                self.mon.cmp_mon(&a.1, &b.1).then_with(|| b.0.cmp(&a.0))
            }
            ModuleStyle::PositionOverTerm => {
                b.0.cmp(&a.0).then_with(|| self.mon.cmp_mon(&a.1, &b.1))
            }
            ModuleStyle::BlockSplit { split } => {
                let block_a = a.0 >= *split;
                let block_b = b.0 >= *split;
                match (block_a, block_b) {
                    (false, true) => Ordering::Greater,
                    (true, false) => Ordering::Less,
                    _ => self.mon.cmp_mon(&a.1, &b.1).then_with(|| b.0.cmp(&a.0)),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(exps: &[u32]) -> Monomial {
        Monomial::new(exps.to_vec())
    }

    #[test]
    fn degrevlex_standard() {
        let o = MonomialOrder::degrevlex(3);
        // x0^2 > x0*x1 > x1^2 > x0*x2 > x1*x2 > x2^2 for x0 > x1 > x2
        let seq = [
            m(&[2, 0, 0]),
            m(&[1, 1, 0]),
            m(&[0, 2, 0]),
            m(&[1, 0, 1]),
            m(&[0, 1, 1]),
            m(&[0, 0, 2]),
        ];
        for w in seq.windows(2) {
            assert_eq!(o.cmp_mon(&w[0], &w[1]), Ordering::Greater);
        }
    }

    #[test]
    fn every_variable_beats_one() {
        for o in [
            MonomialOrder::lex(3),
            MonomialOrder::degrevlex(3),
            MonomialOrder::elimination(3, &[1]),
            MonomialOrder::Weighted {
                weights: vec![0, 1, 0],
                tie: Box::new(MonomialOrder::degrevlex(3)),
            },
        ] {
            for v in 0..3 {
                assert_eq!(
                    o.cmp_mon(&Monomial::var_pow(3, v, 1), &Monomial::one(3)),
                    Ordering::Greater
                );
            }
        }
    }

    #[test]
    fn weyl_default_generator_ranking() {
        // layout [x | d | s], n = 1, r = 1: d > x > s
        let o = MonomialOrder::weyl_default(1, 1);
        let x = m(&[1, 0, 0]);
        let d = m(&[0, 1, 0]);
        let s = m(&[0, 0, 1]);
        assert_eq!(o.cmp_mon(&d, &x), Ordering::Greater);
        assert_eq!(o.cmp_mon(&x, &s), Ordering::Greater);
    }

    #[test]
    fn elimination_blocks_dominate() {
        // drop x1: any power of x1 beats anything free of it
        let o = MonomialOrder::elimination(2, &[1]);
        assert_eq!(o.cmp_mon(&m(&[0, 1]), &m(&[5, 0])), Ordering::Greater);
    }

    #[test]
    fn block_split_dominance() {
        let o = ModuleOrder::split(MonomialOrder::degrevlex(2), 1);
        let lo = (1u32, m(&[4, 4]));
        let hi = (0u32, m(&[0, 0]));
        assert_eq!(o.cmp_term(&hi, &lo), Ordering::Greater);
    }

    #[test]
    fn position_over_term_priority() {
        // lower component wins before monomials are consulted
        let o = ModuleOrder::pot(MonomialOrder::degrevlex(2));
        let a = (0u32, m(&[0, 0]));
        let b = (1u32, m(&[5, 5]));
        assert_eq!(o.cmp_term(&a, &b), Ordering::Greater);
        let c = (1u32, m(&[1, 0]));
        assert_eq!(o.cmp_term(&b, &c), Ordering::Greater);
    }
}
