//! Schubert-class expressions in (equivariant) quantum K-theory: ideal
//! sheaves, the classes alpha^mu, classical and quantum Chevalley products,
//! quantized ideal sheaves, and the quantum K-metric.
//!
//! Everything is exact: coefficients live in the character ring, the
//! quantum variable q enters through polynomials, and the only denominator
//! ever needed is a single power of (1-q).

use crate::curves::{distance, psi_shape};
use crate::error::{Error, Result};
use crate::gamma::{j_weight, sqrt_j, WeightMonomial, WeightPoly};
use crate::poset::CominusculePoset;
use crate::shapes::{classify_skew, enumerate_shapes, Shape};
use std::collections::BTreeMap;
use std::fmt;

/// Polynomial in q with character-ring coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QPoly {
    coeffs: BTreeMap<usize, WeightPoly>,
}

impl QPoly {
    pub fn zero() -> QPoly {
        QPoly {
            coeffs: BTreeMap::new(),
        }
    }

    pub fn constant(rank: usize, c: i64) -> QPoly {
        QPoly::from_weight_poly(0, WeightPoly::constant(rank, c))
    }

    pub fn from_weight_poly(qdeg: usize, p: WeightPoly) -> QPoly {
        let mut out = QPoly::zero();
        out.add_coeff(qdeg, &p);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &WeightPoly)> {
        self.coeffs.iter().map(|(&d, p)| (d, p))
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, d: usize) -> WeightPoly {
        self.coeffs
            .get(&d)
            .cloned()
            .unwrap_or_else(WeightPoly::zero)
    }

    pub fn add_coeff(&mut self, qdeg: usize, p: &WeightPoly) {
        if p.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(qdeg) {
            Entry::Vacant(e) => {
                e.insert(p.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(p);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &QPoly) -> QPoly {
        let mut out = self.clone();
        for (d, p) in other.coeffs() {
            out.add_coeff(d, p);
        }
        out
    }

    pub fn neg(&self) -> QPoly {
        QPoly {
            coeffs: self.coeffs.iter().map(|(&d, p)| (d, p.neg())).collect(),
        }
    }

    pub fn sub(&self, other: &QPoly) -> QPoly {
        self.add(&other.neg())
    }

    /// Multiplication by q^d.
    pub fn mul_q(&self, d: usize) -> QPoly {
        QPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|(&e, p)| (e + d, p.clone()))
                .collect(),
        }
    }

    pub fn mul_weight_poly(&self, w: &WeightPoly) -> QPoly {
        let mut out = QPoly::zero();
        for (d, p) in self.coeffs() {
            out.add_coeff(d, &p.mul(w));
        }
        out
    }

    pub fn scale(&self, c: i64) -> QPoly {
        let mut out = QPoly::zero();
        for (d, p) in self.coeffs() {
            out.add_coeff(d, &p.scale(c));
        }
        out
    }

    /// Sets q = 0.
    pub fn restrict_classical(&self) -> WeightPoly {
        self.coeff(0)
    }

    /// Sends every character to 1, leaving an integer polynomial in q.
    pub fn restrict_nonequivariant(&self) -> BTreeMap<usize, i64> {
        self.coeffs()
            .map(|(d, p)| (d, p.restrict_nonequivariant()))
            .filter(|&(_, c)| c != 0)
            .collect()
    }

    /// Exact division by (1 - q), if possible.
    pub fn div_one_minus_q(&self) -> Option<QPoly> {
        if self.is_zero() {
            return Some(QPoly::zero());
        }
        let deg = self.degree().unwrap();
        let mut out = QPoly::zero();
        let mut partial = WeightPoly::zero();
        for d in 0..=deg {
            partial = partial.add(&self.coeff(d));
            if d < deg {
                out.add_coeff(d, &partial);
            }
        }
        if partial.is_zero() {
            Some(out)
        } else {
            None
        }
    }
}

/// Exact rational function in q whose denominator is a power of (1-q).
#[derive(Debug, Clone)]
pub struct QRational {
    pub num: QPoly,
    pub denom_pow: u8,
}

impl QRational {
    pub fn from_poly(p: QPoly) -> QRational {
        QRational {
            num: p,
            denom_pow: 0,
        }
    }

    /// Cancels the (1-q) factor when it divides the numerator exactly.
    pub fn normalized(&self) -> QRational {
        if self.denom_pow == 1 {
            if let Some(q) = self.num.div_one_minus_q() {
                return QRational {
                    num: q,
                    denom_pow: 0,
                };
            }
        }
        self.clone()
    }

    /// Equality as rational functions, by cross multiplication.
    pub fn eq_rational(&self, other: &QRational) -> bool {
        let mul_denom = |p: &QPoly, e: u8| {
            // p * (1 - q)^e with e <= 1.
            if e == 0 {
                p.clone()
            } else {
                p.sub(&p.mul_q(1))
            }
        };
        mul_denom(&self.num, other.denom_pow) == mul_denom(&other.num, self.denom_pow)
    }
}

/// Which basis a Schubert expression is written in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Basis {
    /// Opposite Schubert classes O^lambda.
    Opposite,
    /// Ideal sheaves I^lambda.
    Ideal,
    /// Quantized ideal sheaves I_q^lambda.
    QIdeal,
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Basis::Opposite => write!(f, "opposite"),
            Basis::Ideal => write!(f, "ideal"),
            Basis::QIdeal => write!(f, "qideal"),
        }
    }
}

/// A finite Γ[q]-combination of basis classes indexed by shapes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SchubertExpr {
    pub basis: Basis,
    terms: BTreeMap<Shape, QPoly>,
}

impl SchubertExpr {
    pub fn new(basis: Basis) -> SchubertExpr {
        SchubertExpr {
            basis,
            terms: BTreeMap::new(),
        }
    }

    pub fn single(basis: Basis, s: Shape, q: QPoly) -> SchubertExpr {
        let mut e = SchubertExpr::new(basis);
        e.add_term(s, &q);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Shape, &QPoly)> {
        self.terms.iter().map(|(&s, q)| (s, q))
    }

    pub fn coeff(&self, s: Shape) -> QPoly {
        self.terms.get(&s).cloned().unwrap_or_else(QPoly::zero)
    }

    pub fn support(&self) -> Vec<Shape> {
        self.terms.keys().copied().collect()
    }

    pub fn add_term(&mut self, s: Shape, q: &QPoly) {
        if q.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(s) {
            Entry::Vacant(e) => {
                e.insert(q.clone());
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(q);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &SchubertExpr) -> Result<SchubertExpr> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch {
                expected: self.basis.to_string(),
                got: other.basis.to_string(),
            });
        }
        let mut out = self.clone();
        for (s, q) in other.terms() {
            out.add_term(s, q);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &SchubertExpr) -> Result<SchubertExpr> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> SchubertExpr {
        SchubertExpr {
            basis: self.basis,
            terms: self.terms.iter().map(|(&s, q)| (s, q.neg())).collect(),
        }
    }

    pub fn mul_q(&self, d: usize) -> SchubertExpr {
        SchubertExpr {
            basis: self.basis,
            terms: self.terms.iter().map(|(&s, q)| (s, q.mul_q(d))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &WeightMonomial) -> SchubertExpr {
        let p = m.as_poly();
        let mut out = SchubertExpr::new(self.basis);
        for (s, q) in self.terms() {
            out.add_term(s, &q.mul_weight_poly(&p));
        }
        out
    }

    /// q = 0 restriction.
    pub fn restrict_classical(&self) -> SchubertExpr {
        let mut out = SchubertExpr::new(self.basis);
        for (s, q) in self.terms() {
            out.add_term(s, &QPoly::from_weight_poly(0, q.restrict_classical()));
        }
        out
    }

    /// All characters to 1; keeps the q-grading.
    pub fn restrict_nonequivariant(&self, rank: usize) -> SchubertExpr {
        let mut out = SchubertExpr::new(self.basis);
        for (s, q) in self.terms() {
            for (d, c) in q.restrict_nonequivariant() {
                out.add_term(
                    s,
                    &QPoly::from_weight_poly(d, WeightPoly::constant(rank, c)),
                );
            }
        }
        out
    }
}

/// The rook strips over mu: every subset of the addable boxes, together
/// with the resulting shape.  Addable boxes are pairwise incomparable, so
/// these are exactly the nu with nu/mu a rook strip.
pub fn rook_strips_over(poset: &CominusculePoset, mu: Shape) -> Vec<(Shape, usize)> {
    subsets_of(poset, mu, &poset.addable_boxes(mu))
}

/// Short rook strips over mu: subsets of the short addable boxes.
pub fn short_rook_strips_over(poset: &CominusculePoset, mu: Shape) -> Vec<(Shape, usize)> {
    let short: Vec<usize> = poset
        .addable_boxes(mu)
        .into_iter()
        .filter(|&b| poset.boxes()[b].short)
        .collect();
    subsets_of(poset, mu, &short)
}

fn subsets_of(_poset: &CominusculePoset, mu: Shape, boxes: &[usize]) -> Vec<(Shape, usize)> {
    let mut out = Vec::with_capacity(1 << boxes.len());
    for mask in 0u32..(1 << boxes.len()) {
        let mut s = mu;
        for (i, &b) in boxes.iter().enumerate() {
            if mask >> i & 1 == 1 {
                s = s.with(b);
            }
        }
        out.push((s, mask.count_ones() as usize));
    }
    out.sort_by_key(|&(s, _)| (s.len(), s.bits()));
    out
}

/// All epsilon >= mu with epsilon/mu a short skew shape (or epsilon = mu).
pub fn short_skew_supersets(poset: &CominusculePoset, mu: Shape) -> Vec<Shape> {
    if poset.space().is_minuscule() {
        return vec![mu];
    }
    enumerate_shapes(poset)
        .into_iter()
        .filter(|&e| classify_skew(poset, e, mu).kind.is_short_skew())
        .collect()
}

/// The ideal sheaf I^mu expanded in the opposite Schubert basis:
/// an alternating, cancellation-free sum over the rook strips nu/mu.
pub fn ideal_sheaf(poset: &CominusculePoset, mu: Shape) -> SchubertExpr {
    let rank = poset.root_system().rank;
    let mut out = SchubertExpr::new(Basis::Opposite);
    for (nu, l) in rook_strips_over(poset, mu) {
        out.add_term(nu, &QPoly::constant(rank, if l % 2 == 0 { 1 } else { -1 }));
    }
    out
}

/// alpha^mu: the short-skew-shape combination whose Chevalley product with
/// (1 - O^{s_gamma}) telescopes to the ideal sheaf.  Every coefficient is a
/// single invertible character.
pub fn alpha(poset: &CominusculePoset, mu: Shape) -> SchubertExpr {
    let mut out = SchubertExpr::new(Basis::Opposite);
    for eps in short_skew_supersets(poset, mu) {
        let c = alpha_coefficient(poset, mu, eps);
        out.add_term(eps, &QPoly::from_weight_poly(0, c.as_poly()));
    }
    out
}

/// The coefficient sqrt(J_mu J_eps) / (J_mu J_eps) of O^eps in alpha^mu.
fn alpha_coefficient(poset: &CominusculePoset, mu: Shape, eps: Shape) -> WeightMonomial {
    let num = sqrt_j(poset, mu, eps).expect("mu <= eps in alpha support");
    let den = j_weight(poset, mu).mul(&j_weight(poset, eps));
    num.div(&den)
}

/// The Chevalley product O^mu (1 - O^{s_gamma}) in both bases: as the
/// signed sqrt(J J)-weighted sum of ideal sheaves over short rook strips,
/// and expanded into opposite Schubert classes.
pub fn chevalley_classical(poset: &CominusculePoset, mu: Shape) -> (SchubertExpr, SchubertExpr) {
    let mut ideal_form = SchubertExpr::new(Basis::Ideal);
    for (nu, l) in short_rook_strips_over(poset, mu) {
        let w = sqrt_j(poset, mu, nu).expect("short rook strips are nested");
        let sign = if l % 2 == 0 { 1 } else { -1 };
        ideal_form.add_term(nu, &QPoly::from_weight_poly(0, w.as_poly().scale(sign)));
    }
    let opposite = expand_ideal_basis(poset, &ideal_form).expect("ideal-basis input");
    (ideal_form, opposite)
}

/// Substitutes I^nu -> ideal_sheaf(nu) and collects in the opposite basis.
pub fn expand_ideal_basis(poset: &CominusculePoset, e: &SchubertExpr) -> Result<SchubertExpr> {
    if e.basis != Basis::Ideal {
        return Err(Error::BasisMismatch {
            expected: Basis::Ideal.to_string(),
            got: e.basis.to_string(),
        });
    }
    let mut out = SchubertExpr::new(Basis::Opposite);
    for (nu, q) in e.terms() {
        for (rho, c) in ideal_sheaf(poset, nu).terms() {
            // c is +-1 at q^0, so this just transports the sign.
            out.add_term(rho, &q.mul_weight_poly(&c.coeff(0)));
        }
    }
    Ok(out)
}

/// Checks the telescoping identity
/// alpha^mu (1 - O^{s_gamma}) = sum over rook strips (-1)^l O^nu,
/// with exact equivariant coefficients.
pub fn alpha_identity_holds(poset: &CominusculePoset, mu: Shape) -> bool {
    let mut lhs = SchubertExpr::new(Basis::Opposite);
    for eps in short_skew_supersets(poset, mu) {
        let c_eps = alpha_coefficient(poset, mu, eps);
        let (ideal_form, _) = chevalley_classical(poset, eps);
        for (nu, q) in ideal_form.terms() {
            // q is a signed monomial at q^0.
            for (rho, c) in ideal_sheaf(poset, nu).terms() {
                let contrib = q
                    .mul_weight_poly(&c.coeff(0))
                    .mul_weight_poly(&c_eps.as_poly());
                lhs.add_term(rho, &contrib.coeff(0).into());
            }
        }
    }
    lhs == ideal_sheaf(poset, mu)
}

impl From<WeightPoly> for QPoly {
    fn from(p: WeightPoly) -> QPoly {
        QPoly::from_weight_poly(0, p)
    }
}

/// Applies the first-curve-neighborhood map termwise: O^nu -> O^{nu(-1)},
/// collecting cancellations.
pub fn psi_expr(poset: &CominusculePoset, e: &SchubertExpr) -> Result<SchubertExpr> {
    if e.basis != Basis::Opposite {
        return Err(Error::BasisMismatch {
            expected: Basis::Opposite.to_string(),
            got: e.basis.to_string(),
        });
    }
    let mut out = SchubertExpr::new(Basis::Opposite);
    for (nu, q) in e.terms() {
        out.add_term(psi_shape(poset, nu), q);
    }
    Ok(out)
}

/// The quantized ideal sheaf I_q^mu = I^mu - q psi I^mu, with the quantum
/// correction computed termwise over the rook strips.  The correction
/// cancels to zero exactly when z_1 is not contained in mu.
///
/// The termwise sum is NOT always the ideal sheaf of mu(-1): for shapes
/// near the top of the Bruhat order, mu(-1) acquires addable boxes whose
/// preimages fall outside the poset (simplest case: the point class of
/// Gr(2,4), where psi I^{(2,2)} = O^{(1)} while I^{(1)} has four terms).
/// Duality only holds with the termwise correction.
pub fn quantized_ideal_sheaf(poset: &CominusculePoset, mu: Shape) -> SchubertExpr {
    let classical = ideal_sheaf(poset, mu);
    let correction = psi_expr(poset, &classical).expect("opposite basis");
    debug_assert_eq!(correction.is_zero(), !poset.z1().leq(&mu));
    classical
        .sub(&correction.mul_q(1))
        .expect("both sides in the opposite basis")
}

/// The quantum Chevalley product O^mu * (1 - O^{s_gamma}) in the opposite
/// basis, computed as classical - q psi(classical) and cross-checked
/// against its quantized-ideal-sheaf form.
pub fn chevalley_quantum(poset: &CominusculePoset, mu: Shape) -> SchubertExpr {
    let (ideal_form, classical) = chevalley_classical(poset, mu);
    let quantum = classical
        .sub(&psi_expr(poset, &classical).unwrap().mul_q(1))
        .unwrap();

    // Same product written over quantized ideal sheaves.
    let mut via_qideals = SchubertExpr::new(Basis::Opposite);
    for (nu, q) in ideal_form.terms() {
        let w = q.coeff(0);
        for (rho, c) in quantized_ideal_sheaf(poset, nu).terms() {
            via_qideals.add_term(rho, &c.mul_weight_poly(&w));
        }
    }
    assert_eq!(
        quantum, via_qideals,
        "the two quantum Chevalley forms disagree"
    );
    quantum
}

/// The quantum K-metric pairing ((a, O_lambda)) for a in the opposite
/// basis: sum of coeff_nu(q) q^{d(nu,lambda)} over (1-q).
pub fn qk_pairing(poset: &CominusculePoset, a: &SchubertExpr, lambda: Shape) -> Result<QRational> {
    if a.basis != Basis::Opposite {
        return Err(Error::BasisMismatch {
            expected: Basis::Opposite.to_string(),
            got: a.basis.to_string(),
        });
    }
    let mut num = QPoly::zero();
    for (nu, q) in a.terms() {
        num = num.add(&q.mul_q(distance(poset, nu, lambda)));
    }
    Ok(QRational { num, denom_pow: 1 }.normalized())
}

/// The sheaf Euler characteristic pairing (a, O_lambda) for a classical
/// (q-degree zero) expression in the opposite basis.
pub fn classical_pairing(
    _poset: &CominusculePoset,
    a: &SchubertExpr,
    lambda: Shape,
) -> Result<WeightPoly> {
    if a.basis != Basis::Opposite {
        return Err(Error::BasisMismatch {
            expected: Basis::Opposite.to_string(),
            got: a.basis.to_string(),
        });
    }
    let mut out = WeightPoly::zero();
    for (nu, q) in a.terms() {
        if q.degree().unwrap_or(0) > 0 {
            return Err(Error::Domain(
                "classical pairing requires a q-degree-zero expression".into(),
            ));
        }
        if nu.leq(&lambda) {
            out = out.add(&q.coeff(0));
        }
    }
    Ok(out)
}
