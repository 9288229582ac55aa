//! The det Q structure constants of QK_T(Gr(k,n)): Grassmannian
//! permutations, GL(n)-torus characters T_1..T_n, and the closed-form
//! product det Q * O^mu.
//!
//! This module works in the GL(n) character lattice Z^n, where det(C^n) =
//! T_1...T_n is a genuine monomial; everything else in the crate uses the
//! semisimple lattice.  The q-degrees come from the curve-neighborhood
//! distance of the type A poset.

use crate::curves::distance;
use crate::error::{Error, Result};
use crate::gamma::WeightPoly;
use crate::poset::{CominusculePoset, SpaceKind};
use crate::qk::{Basis, QPoly, SchubertExpr};
use crate::roots::Weight;
use crate::shapes::{enumerate_shapes, shape_from_parts, shape_to_parts};

/// A permutation with a single descent at position k, in one-line notation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GrassPermutation {
    pub one_line: Vec<usize>,
    pub k: usize,
}

impl GrassPermutation {
    /// The first k entries in increasing order.
    pub fn i_set(&self) -> &[usize] {
        &self.one_line[..self.k]
    }

    /// The complementary last n-k entries in increasing order.
    pub fn j_set(&self) -> &[usize] {
        &self.one_line[self.k..]
    }
}

fn check_fits(k: usize, n: usize, lambda: &[usize]) -> Result<()> {
    let decreasing = lambda.windows(2).all(|w| w[0] >= w[1]);
    if !decreasing || lambda.len() > k || lambda.first().copied().unwrap_or(0) > n - k {
        return Err(Error::Domain(format!(
            "partition {lambda:?} does not fit in the {k} x {} box",
            n - k
        )));
    }
    Ok(())
}

/// The Grassmannian permutation of a partition: w(i) = i + lambda_{k-i+1}
/// for i <= k, remaining values in increasing order.
pub fn grass_perm(k: usize, n: usize, lambda: &[usize]) -> Result<GrassPermutation> {
    check_fits(k, n, lambda)?;
    let part = |i: usize| lambda.get(i).copied().unwrap_or(0);
    let i_vals: Vec<usize> = (1..=k).map(|i| i + part(k - i)).collect();
    let mut taken = vec![false; n + 1];
    for &v in &i_vals {
        taken[v] = true;
    }
    let j_vals: Vec<usize> = (1..=n).filter(|&v| !taken[v]).collect();
    let mut one_line = i_vals;
    one_line.extend(j_vals);
    Ok(GrassPermutation { one_line, k })
}

/// A monomial in the GL(n) characters, as its exponent vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GlMonomial(pub Vec<i64>);

impl GlMonomial {
    /// Renders as `T1*T3` (with `Ti^e` for exponents other than one), or
    /// `1` for the empty monomial.
    pub fn render(&self) -> String {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e != 0)
            .map(|(i, &e)| {
                if e == 1 {
                    format!("T{}", i + 1)
                } else {
                    format!("T{}^{}", i + 1, e)
                }
            })
            .collect();
        if factors.is_empty() {
            "1".to_string()
        } else {
            factors.join("*")
        }
    }
}

/// The character [C_{-lambda.omega_gamma}] det(C^n) = product of T_j over
/// the complement J_lambda of the permutation values.
pub fn lambda_character(k: usize, n: usize, lambda: &[usize]) -> Result<GlMonomial> {
    let perm = grass_perm(k, n, lambda)?;
    let mut exps = vec![0i64; n];
    for &j in perm.j_set() {
        exps[j - 1] = 1;
    }
    Ok(GlMonomial(exps))
}

/// The product det Q * O^mu in QK_T(Gr(k,n)): one term per shape lambda,
/// with coefficient lambda_character(lambda) q^{d(mu,lambda)}.  Every
/// coefficient is a single sign-free monomial times a power of q.
pub fn detq_product(poset: &CominusculePoset, mu_parts: &[usize]) -> Result<SchubertExpr> {
    let (k, n) = match poset.kind() {
        SpaceKind::Grassmannian { k, n } => (k, n),
        other => {
            return Err(Error::Domain(format!(
                "det Q products are defined on Grassmannians, not {other}"
            )))
        }
    };
    let mu = shape_from_parts(poset, mu_parts)?;
    let mut out = SchubertExpr::new(Basis::Opposite);
    for lam in enumerate_shapes(poset) {
        let parts = shape_to_parts(poset, lam);
        let character = lambda_character(k, n, &parts)?;
        let d = distance(poset, mu, lam);
        out.add_term(
            lam,
            &QPoly::from_weight_poly(d, WeightPoly::monomial(Weight(character.0), 1)),
        );
    }
    Ok(out)
}

/// Text rendering of a det Q product: `T1*T2*O[2,2] + ... + T3*T4*q*O[]`,
/// or with the characters restricted to 1 when `nonequivariant` is set.
pub fn detq_to_text(poset: &CominusculePoset, e: &SchubertExpr, nonequivariant: bool) -> String {
    let mut terms: Vec<(usize, std::cmp::Reverse<usize>, u64, String)> = Vec::new();
    for (s, q) in e.terms() {
        for (d, coeff) in q.coeffs() {
            let (w, c) = coeff.terms().next().expect("nonzero coefficient");
            assert_eq!(coeff.num_terms(), 1);
            assert_eq!(c, 1, "det Q coefficients are sign-free monomials");
            let mut factors: Vec<String> = Vec::new();
            if !nonequivariant {
                let m = GlMonomial(w.0.clone()).render();
                if m != "1" {
                    factors.push(m);
                }
            }
            match d {
                0 => {}
                1 => factors.push("q".to_string()),
                _ => factors.push(format!("q^{d}")),
            }
            factors.push(format!("O{}", crate::shapes::render_shape(poset, s)));
            terms.push((d, std::cmp::Reverse(s.len()), s.bits(), factors.join("*")));
        }
    }
    terms.sort();
    terms
        .into_iter()
        .map(|(_, _, _, t)| t)
        .collect::<Vec<_>>()
        .join(" + ")
}
