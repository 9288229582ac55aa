//! Exact arithmetic in the representation ring of the torus: integer-linear
//! combinations of weight-lattice characters, and the equivariant weights
//! J_u and sqrt(J_u J_v) attached to shapes.
//!
//! The ring is the group ring of the weight lattice: characters multiply by
//! adding weights.  All quantities needed here are either such Laurent
//! polynomials or single invertible monomials, so no fractions ever arise;
//! division is only defined by monomials.

use crate::error::{Error, Result};
use crate::poset::CominusculePoset;
use crate::roots::Weight;
use crate::shapes::{self, Shape};
use std::collections::BTreeMap;

/// An element of K^T(point): a finite integer combination of characters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPoly {
    terms: BTreeMap<Weight, i64>,
}

impl WeightPoly {
    pub fn zero() -> WeightPoly {
        WeightPoly {
            terms: BTreeMap::new(),
        }
    }

    /// The constant c = c * [C_0] in a lattice of the given rank.
    pub fn constant(rank: usize, c: i64) -> WeightPoly {
        let mut p = WeightPoly::zero();
        p.add_term(Weight::zero(rank), c);
        p
    }

    pub fn monomial(w: Weight, c: i64) -> WeightPoly {
        let mut p = WeightPoly::zero();
        p.add_term(w, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, i64)> {
        self.terms.iter().map(|(w, &c)| (w, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: Weight, c: i64) {
        if c == 0 {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &WeightPoly) -> WeightPoly {
        let mut out = self.clone();
        for (w, c) in other.terms() {
            out.add_term(w.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> WeightPoly {
        WeightPoly {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &WeightPoly) -> WeightPoly {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &WeightPoly) -> WeightPoly {
        let mut out = WeightPoly::zero();
        for (w1, c1) in self.terms() {
            for (w2, c2) in other.terms() {
                out.add_term(w1.add(w2), c1 * c2);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> WeightPoly {
        if c == 0 {
            return WeightPoly::zero();
        }
        WeightPoly {
            terms: self.terms.iter().map(|(w, v)| (w.clone(), v * c)).collect(),
        }
    }

    /// Multiplication by a single character [C_w].
    pub fn shift(&self, w: &Weight) -> WeightPoly {
        WeightPoly {
            terms: self.terms.iter().map(|(u, &c)| (u.add(w), c)).collect(),
        }
    }

    /// Division by a monomial; dividing by anything else is an error.
    pub fn div_monomial(&self, m: &WeightMonomial) -> Result<WeightPoly> {
        if m.sign != 1 {
            return Err(Error::Domain("division by a signed monomial".into()));
        }
        Ok(self.shift(&m.weight.neg()))
    }

    /// The map sending every character to 1.
    pub fn restrict_nonequivariant(&self) -> i64 {
        self.terms.values().sum()
    }

    /// If the polynomial is a single character with coefficient +-1,
    /// returns it as a monomial.
    pub fn as_monomial(&self) -> Option<WeightMonomial> {
        if self.terms.len() != 1 {
            return None;
        }
        let (w, &c) = self.terms.iter().next().unwrap();
        if c == 1 || c == -1 {
            Some(WeightMonomial {
                weight: w.clone(),
                sign: c as i8,
            })
        } else {
            None
        }
    }
}

/// A single invertible character with a sign; every weight arising from the
/// J and sqrt(J J) constructions has sign +1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMonomial {
    pub weight: Weight,
    pub sign: i8,
}

impl WeightMonomial {
    pub fn one(rank: usize) -> WeightMonomial {
        WeightMonomial {
            weight: Weight::zero(rank),
            sign: 1,
        }
    }

    pub fn mul(&self, other: &WeightMonomial) -> WeightMonomial {
        WeightMonomial {
            weight: self.weight.add(&other.weight),
            sign: self.sign * other.sign,
        }
    }

    pub fn div(&self, other: &WeightMonomial) -> WeightMonomial {
        WeightMonomial {
            weight: self.weight.sub(&other.weight),
            sign: self.sign * other.sign,
        }
    }

    pub fn inverse(&self) -> WeightMonomial {
        WeightMonomial {
            weight: self.weight.neg(),
            sign: self.sign,
        }
    }

    pub fn as_poly(&self) -> WeightPoly {
        WeightPoly::monomial(self.weight.clone(), i64::from(self.sign))
    }
}

/// J_u = [C_{u.omega_gamma - omega_gamma}].
pub fn j_weight(poset: &CominusculePoset, u: Shape) -> WeightMonomial {
    let omega = poset.space().omega_gamma();
    let moved = shapes::to_weyl(poset, u).apply_weight(&omega);
    WeightMonomial {
        weight: moved.sub(&omega),
        sign: 1,
    }
}

/// Sum of the simple roots delta(alpha) over a set of boxes, as a weight.
pub fn delta_sum(poset: &CominusculePoset, boxes: &[usize]) -> Weight {
    let rs = poset.root_system();
    let mut w = Weight::zero(rs.rank);
    for &b in boxes {
        let simple = rs.simple_root_index(poset.boxes()[b].delta);
        w = w.add(&Weight(rs.root(simple).fund.clone()));
    }
    w
}

/// sqrt(J_v J_w) = [C_{v.omega_gamma - omega_gamma - delta(w/v)}] for any
/// skew shape w/v; an honest square root exactly on short rook strips.
pub fn sqrt_j(poset: &CominusculePoset, v: Shape, w: Shape) -> Result<WeightMonomial> {
    if !v.leq(&w) {
        return Err(Error::Domain("sqrt(J J) requires nested shapes".into()));
    }
    let skew: Vec<usize> = w.difference(&v).iter().collect();
    let jv = j_weight(poset, v);
    Ok(WeightMonomial {
        weight: jv.weight.sub(&delta_sum(poset, &skew)),
        sign: 1,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::{build_poset, SpaceKind};
    use crate::shapes::{classify_skew, enumerate_shapes, parse_shape};

    #[test]
    fn j_of_empty_is_one() {
        let p = build_poset(SpaceKind::Lagrangian { n: 4 }).unwrap();
        let j = j_weight(&p, Shape::EMPTY);
        assert!(j.weight.is_zero());
        assert_eq!(j.sign, 1);
    }

    #[test]
    fn j_of_single_box_gr24() {
        // s_gamma . omega_gamma - omega_gamma = -gamma.
        let p = build_poset(SpaceKind::Grassmannian { k: 2, n: 4 }).unwrap();
        let s = parse_shape(&p, "[1]").unwrap();
        let gamma_fund = Weight(
            p.root_system()
                .root(p.root_system().simple_root_index(1))
                .fund
                .clone(),
        );
        assert_eq!(j_weight(&p, s).weight, gamma_fund.neg());
    }

    #[test]
    fn j_restricts_to_one() {
        let p = build_poset(SpaceKind::Grassmannian { k: 2, n: 4 }).unwrap();
        for s in enumerate_shapes(&p) {
            assert_eq!(j_weight(&p, s).as_poly().restrict_nonequivariant(), 1);
        }
    }

    #[test]
    fn sqrt_j_reduces_to_j_on_empty_skew() {
        let p = build_poset(SpaceKind::Lagrangian { n: 4 }).unwrap();
        for s in enumerate_shapes(&p) {
            assert_eq!(sqrt_j(&p, s, s).unwrap(), j_weight(&p, s));
        }
        assert!(sqrt_j(&p, p.full_shape(), Shape::EMPTY).is_err());
    }

    #[test]
    fn sqrt_j_squares_on_short_rook_strips() {
        // (sqrt(J_v J_w))^2 = J_v J_w whenever w/v is a short rook strip.
        for kind in [
            SpaceKind::Lagrangian { n: 3 },
            SpaceKind::Lagrangian { n: 4 },
            SpaceKind::QuadricOdd { dim: 7 },
        ] {
            let p = build_poset(kind).unwrap();
            let shapes = enumerate_shapes(&p);
            let mut nontrivial = 0;
            for &v in &shapes {
                for &w in &shapes {
                    if classify_skew(&p, w, v).kind.is_short_rook_strip() {
                        let s = sqrt_j(&p, v, w).unwrap();
                        let square = s.mul(&s);
                        let product = j_weight(&p, v).mul(&j_weight(&p, w));
                        assert_eq!(square, product, "{kind}");
                        if v != w {
                            nontrivial += 1;
                        }
                    }
                }
            }
            assert!(
                nontrivial > 0,
                "{kind} should have nonempty short rook strips"
            );
        }
    }

    #[test]
    fn lemma_weight_identity_small() {
        // sqrt(J_u J_v) sqrt(J_v J_w) / J_v = sqrt(J_u J_w) on chains.
        let p = build_poset(SpaceKind::Lagrangian { n: 3 }).unwrap();
        let shapes = enumerate_shapes(&p);
        for &u in &shapes {
            for &v in &shapes {
                if !u.leq(&v) {
                    continue;
                }
                for &w in &shapes {
                    if !v.leq(&w) {
                        continue;
                    }
                    let lhs = sqrt_j(&p, u, v)
                        .unwrap()
                        .mul(&sqrt_j(&p, v, w).unwrap())
                        .div(&j_weight(&p, v));
                    assert_eq!(lhs, sqrt_j(&p, u, w).unwrap());
                }
            }
        }
    }

    #[test]
    fn restriction_counts_coefficients() {
        let mut p = WeightPoly::zero();
        p.add_term(Weight(vec![1, 0]), 2);
        p.add_term(Weight(vec![0, 1]), -1);
        assert_eq!(p.restrict_nonequivariant(), 1);
        assert_eq!(WeightPoly::zero().restrict_nonequivariant(), 0);
        assert_eq!(WeightPoly::constant(2, 1).restrict_nonequivariant(), 1);
    }
}
