//! Root systems and Weyl groups for types A, B, C, D, E6, E7 in exact
//! integer coordinates.
//!
//! Roots are stored in simple-root coordinates and weights in
//! fundamental-weight coordinates; the two are related by the Cartan
//! matrix, so every computation here stays in `i64` arithmetic for all
//! supported families.  Squared lengths are normalized so long roots have
//! norm 2 (short roots then have norm 1 in types B and C).

use crate::error::{Error, Result};
use std::fmt;

/// Dynkin family of a root system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    A,
    B,
    C,
    D,
    E6,
    E7,
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::C => write!(f, "C"),
            Family::D => write!(f, "D"),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
        }
    }
}

/// A weight in fundamental-weight coordinates.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Weight(pub Vec<i64>);

impl Weight {
    pub fn zero(rank: usize) -> Self {
        Weight(vec![0; rank])
    }

    /// The fundamental weight attached to simple root `i`.
    pub fn fundamental(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        Weight(v)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    pub fn add(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Weight) -> Weight {
        Weight(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn neg(&self) -> Weight {
        Weight(self.0.iter().map(|a| -a).collect())
    }
}

/// A positive root, carrying both coordinate systems and its squared length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coordinates in the simple-root basis; all nonnegative.
    pub simple: Vec<i64>,
    /// Coordinates in the fundamental-weight basis (Cartan matrix times `simple`).
    pub fund: Vec<i64>,
    /// Squared length: 2 for long roots, 1 for short ones.
    pub norm2: i64,
    /// Coordinates of the coroot in the simple-coroot basis.
    pub coroot: Vec<i64>,
}

impl Root {
    pub fn height(&self) -> i64 {
        self.simple.iter().sum()
    }

    pub fn is_long(&self) -> bool {
        self.norm2 == 2
    }
}

type Mat = Vec<Vec<i64>>;

fn mat_identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

fn mat_mul(a: &Mat, b: &Mat) -> Mat {
    let n = a.len();
    let mut out = vec![vec![0i64; n]; n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i][k];
            if aik == 0 {
                continue;
            }
            for j in 0..n {
                out[i][j] += aik * b[k][j];
            }
        }
    }
    out
}

fn mat_apply(m: &Mat, v: &[i64]) -> Vec<i64> {
    m.iter()
        .map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum())
        .collect()
}

/// An element of the Weyl group, stored as its action matrices on the root
/// lattice (simple-root coordinates) and the weight lattice
/// (fundamental-weight coordinates).  Both act on column vectors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeylElement {
    rt: Mat,
    wt: Mat,
}

impl WeylElement {
    pub fn identity(rank: usize) -> Self {
        WeylElement {
            rt: mat_identity(rank),
            wt: mat_identity(rank),
        }
    }

    /// Composition `self . other`: `other` acts first.
    pub fn compose(&self, other: &WeylElement) -> WeylElement {
        WeylElement {
            rt: mat_mul(&self.rt, &other.rt),
            wt: mat_mul(&self.wt, &other.wt),
        }
    }

    pub fn apply_weight(&self, w: &Weight) -> Weight {
        Weight(mat_apply(&self.wt, &w.0))
    }

    /// Image of a root given in simple-root coordinates.
    pub fn apply_root(&self, simple: &[i64]) -> Vec<i64> {
        mat_apply(&self.rt, simple)
    }

    pub fn is_identity(&self) -> bool {
        let n = self.rt.len();
        *self == WeylElement::identity(n)
    }
}

/// Root-system data: Cartan matrix, the full positive-root enumeration, and
/// reflection machinery.  Immutable after construction.
#[derive(Debug, Clone)]
pub struct RootSystem {
    pub family: Family,
    pub rank: usize,
    /// `cartan[i][j] = <alpha_j, alpha_i^vee>`.
    pub cartan: Mat,
    /// Doubled squared lengths 2(alpha_i, alpha_i) of the simple roots.
    norm2x: Vec<i64>,
    positive: Vec<Root>,
    /// Index of each positive root keyed by its simple coordinates.
    index: std::collections::BTreeMap<Vec<i64>, usize>,
}

fn cartan_matrix(family: Family, rank: usize) -> Result<(Mat, Vec<i64>)> {
    let chain = |n: usize| -> Mat {
        let mut m = vec![vec![0i64; n]; n];
        for i in 0..n {
            m[i][i] = 2;
            if i + 1 < n {
                m[i][i + 1] = -1;
                m[i + 1][i] = -1;
            }
        }
        m
    };
    let unsupported = |msg: &str| Error::Config(msg.to_string());
    match family {
        Family::A => {
            if rank < 1 {
                return Err(unsupported("type A requires rank >= 1"));
            }
            Ok((chain(rank), vec![4; rank]))
        }
        Family::B => {
            if rank < 2 {
                return Err(unsupported("type B requires rank >= 2"));
            }
            let mut m = chain(rank);
            // alpha_rank is the short simple root e_n.
            m[rank - 1][rank - 2] = -2;
            let mut norms = vec![4; rank];
            norms[rank - 1] = 2;
            Ok((m, norms))
        }
        Family::C => {
            if rank < 2 {
                return Err(unsupported("type C requires rank >= 2"));
            }
            let mut m = chain(rank);
            // alpha_rank is the long simple root 2e_n.
            m[rank - 2][rank - 1] = -2;
            let mut norms = vec![2; rank];
            norms[rank - 1] = 4;
            Ok((m, norms))
        }
        Family::D => {
            if rank < 3 {
                return Err(unsupported("type D requires rank >= 3"));
            }
            let mut m = chain(rank - 1);
            for row in &mut m {
                row.push(0);
            }
            m.push(vec![0; rank]);
            m[rank - 1][rank - 1] = 2;
            // The fork node alpha_rank = e_{n-1} + e_n attaches to alpha_{rank-2}.
            m[rank - 1][rank - 3] = -1;
            m[rank - 3][rank - 1] = -1;
            Ok((m, vec![4; rank]))
        }
        Family::E6 | Family::E7 => {
            let n = if family == Family::E6 { 6 } else { 7 };
            if rank != n {
                return Err(unsupported("exceptional families have fixed rank"));
            }
            // Bourbaki numbering: the chain 1-3-4-5-6(-7) with node 2 off node 4.
            let mut edges: Vec<(usize, usize)> = vec![(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)];
            if n == 7 {
                edges.push((6, 7));
            }
            let mut m = vec![vec![0i64; n]; n];
            for (i, row) in m.iter_mut().enumerate() {
                row[i] = 2;
            }
            for (a, b) in edges {
                m[a - 1][b - 1] = -1;
                m[b - 1][a - 1] = -1;
            }
            Ok((m, vec![4; n]))
        }
    }
}

/// Number of positive roots, used as a construction cross-check.
fn expected_positive_count(family: Family, rank: usize) -> usize {
    match family {
        Family::A => rank * (rank + 1) / 2,
        Family::B | Family::C => rank * rank,
        Family::D => rank * (rank - 1),
        Family::E6 => 36,
        Family::E7 => 63,
    }
}

impl RootSystem {
    /// Builds the root system with its full positive-root enumeration,
    /// sorted by height then lexicographically.
    pub fn new(family: Family, rank: usize) -> Result<RootSystem> {
        let (cartan, norm2x) = cartan_matrix(family, rank)?;
        for i in 0..rank {
            assert_eq!(cartan[i][i], 2);
            for j in 0..rank {
                if i != j {
                    assert!(cartan[i][j] <= 0);
                    // Symmetrizability of the Cartan data against the norms.
                    assert_eq!(cartan[i][j] * norm2x[i], cartan[j][i] * norm2x[j]);
                }
            }
        }

        // Closure of the simple roots under root strings, height by height:
        // alpha + alpha_i is a root iff q = p - <alpha, alpha_i^vee> >= 1,
        // where p counts how far the string alpha - k alpha_i extends.
        let mut coords: Vec<Vec<i64>> = Vec::new();
        let mut seen = std::collections::BTreeSet::new();
        for i in 0..rank {
            let mut v = vec![0i64; rank];
            v[i] = 1;
            seen.insert(v.clone());
            coords.push(v);
        }
        let mut frontier = coords.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for alpha in &frontier {
                let fund = mat_apply(&cartan, alpha);
                for i in 0..rank {
                    let mut p = 0i64;
                    loop {
                        let mut down = alpha.clone();
                        down[i] -= p + 1;
                        if down.iter().all(|&c| c >= 0) && seen.contains(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - fund[i] >= 1 {
                        let mut up = alpha.clone();
                        up[i] += 1;
                        if seen.insert(up.clone()) {
                            coords.push(up.clone());
                            next.push(up);
                        }
                    }
                }
            }
            frontier = next;
        }
        coords.sort_by_key(|r| (r.iter().sum::<i64>(), r.clone()));
        assert_eq!(
            coords.len(),
            expected_positive_count(family, rank),
            "positive root count mismatch for {family}{rank}"
        );

        // Symmetrized form 2(alpha_i, alpha_j), integral in the long-norm-2 scale.
        let sym: Mat = (0..rank)
            .map(|i| (0..rank).map(|j| cartan[i][j] * norm2x[i] / 2).collect())
            .collect();
        let positive: Vec<Root> = coords
            .iter()
            .map(|r| {
                let fund = mat_apply(&cartan, r);
                let mut n2x = 0i64;
                for i in 0..rank {
                    for j in 0..rank {
                        n2x += r[i] * r[j] * sym[i][j];
                    }
                }
                assert!(n2x == 2 || n2x == 4, "unexpected root norm {n2x}");
                let coroot: Vec<i64> = (0..rank)
                    .map(|i| {
                        let num = r[i] * norm2x[i];
                        assert_eq!(num % n2x, 0);
                        num / n2x
                    })
                    .collect();
                Root {
                    simple: r.clone(),
                    fund,
                    norm2: n2x / 2,
                    coroot,
                }
            })
            .collect();
        let index = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.simple.clone(), i))
            .collect();
        Ok(RootSystem {
            family,
            rank,
            cartan,
            norm2x,
            positive,
            index,
        })
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn root(&self, idx: usize) -> &Root {
        &self.positive[idx]
    }

    /// Index of the positive root with the given simple coordinates.
    pub fn root_index(&self, simple: &[i64]) -> Option<usize> {
        self.index.get(simple).copied()
    }

    /// Index of the simple root `alpha_i` (zero-based) among the positive roots.
    pub fn simple_root_index(&self, i: usize) -> usize {
        let mut v = vec![0i64; self.rank];
        v[i] = 1;
        self.index[&v]
    }

    pub fn norm2_simple(&self, i: usize) -> i64 {
        self.norm2x[i] / 2
    }

    /// Pairing `<w, alpha^vee>` of a weight in fundamental coordinates with
    /// the coroot of positive root `idx`.
    pub fn pair_coroot(&self, w: &Weight, idx: usize) -> i64 {
        self.positive[idx]
            .coroot
            .iter()
            .zip(&w.0)
            .map(|(c, v)| c * v)
            .sum()
    }

    /// Reflection s_alpha in the positive root `idx`, applicable to weights.
    pub fn reflect(&self, idx: usize, w: &Weight) -> Weight {
        let pairing = self.pair_coroot(w, idx);
        let f = &self.positive[idx].fund;
        Weight(w.0.iter().zip(f).map(|(v, fi)| v - pairing * fi).collect())
    }

    /// The reflection s_alpha as a Weyl group element.
    pub fn reflection(&self, idx: usize) -> WeylElement {
        let rank = self.rank;
        let root = &self.positive[idx];
        let mut rt = mat_identity(rank);
        let mut wt = mat_identity(rank);
        for j in 0..rank {
            // s(alpha_j) = alpha_j - <alpha_j, alpha^vee> alpha
            let pairing: i64 = (0..rank).map(|i| root.coroot[i] * self.cartan[i][j]).sum();
            for (i, row) in rt.iter_mut().enumerate() {
                row[j] -= pairing * root.simple[i];
            }
            // s(omega_j) = omega_j - coroot_j * alpha  (in fundamental coordinates)
            for (i, row) in wt.iter_mut().enumerate() {
                row[j] -= root.coroot[j] * root.fund[i];
            }
        }
        WeylElement { rt, wt }
    }

    /// Whether a root-lattice vector has all-nonnegative coordinates.
    pub fn is_nonnegative(v: &[i64]) -> bool {
        v.iter().all(|&c| c >= 0)
    }

    /// Inversion set `I(w) = { alpha > 0 : w.alpha < 0 }`, as indices into
    /// the positive-root enumeration.
    pub fn inversions(&self, w: &WeylElement) -> Vec<usize> {
        (0..self.positive.len())
            .filter(|&t| {
                let img = w.apply_root(&self.positive[t].simple);
                img.iter().all(|&c| c <= 0) && img.iter().any(|&c| c < 0)
            })
            .collect()
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        self.inversions(w).len()
    }

    /// Longest element of the parabolic subgroup generated by the listed
    /// simple reflections; `longest_element(all)` is w_0.
    pub fn longest_element(&self, simple_subset: &[usize]) -> WeylElement {
        let mut w = WeylElement::identity(self.rank);
        loop {
            let mut advanced = false;
            for &i in simple_subset {
                let img = w.apply_root(&self.positive[self.simple_root_index(i)].simple);
                if RootSystem::is_nonnegative(&img) {
                    w = w.compose(&self.reflection(self.simple_root_index(i)));
                    advanced = true;
                }
            }
            if !advanced {
                return w;
            }
        }
    }

    /// Partial order on the root lattice: `a <= b` iff `b - a` has
    /// nonnegative simple-root coordinates.
    pub fn root_leq(a: &[i64], b: &[i64]) -> bool {
        a.iter().zip(b).all(|(x, y)| x <= y)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn a3_positive_roots_all_long() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        assert_eq!(rs.positive_roots().len(), 6);
        assert!(rs.positive_roots().iter().all(|r| r.is_long()));
    }

    #[test]
    fn c4_norm_classification() {
        // Brute-force closure classifies 4 long roots (the 2e_i) among 16.
        let rs = RootSystem::new(Family::C, 4).unwrap();
        assert_eq!(rs.positive_roots().len(), 16);
        let long: Vec<_> = rs.positive_roots().iter().filter(|r| r.is_long()).collect();
        assert_eq!(long.len(), 4);
        // The long roots 2e_i = 2(alpha_i + .. + alpha_3) + alpha_4.
        for r in long {
            assert_eq!(r.simple[3], 1);
            assert!(r.simple[..3].iter().all(|&c| c == 0 || c == 2));
        }
    }

    #[test]
    fn e7_positive_count() {
        let rs = RootSystem::new(Family::E7, 7).unwrap();
        assert_eq!(rs.positive_roots().len(), 63);
    }

    #[test]
    fn b3_has_three_short_roots() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        assert_eq!(rs.positive_roots().len(), 9);
        let short = rs.positive_roots().iter().filter(|r| !r.is_long()).count();
        assert_eq!(short, 3); // e_1, e_2, e_3
    }

    #[test]
    fn reflection_is_involution() {
        for (fam, rank) in [
            (Family::A, 3),
            (Family::B, 3),
            (Family::C, 3),
            (Family::D, 4),
            (Family::E6, 6),
        ] {
            let rs = RootSystem::new(fam, rank).unwrap();
            for idx in 0..rs.positive_roots().len() {
                let s = rs.reflection(idx);
                assert!(s.compose(&s).is_identity(), "{fam}{rank} root {idx}");
            }
        }
    }

    #[test]
    fn fundamental_weight_reflection() {
        // s_gamma(omega_gamma) = omega_gamma - gamma.
        let rs = RootSystem::new(Family::A, 3).unwrap();
        for i in 0..3 {
            let w = Weight::fundamental(3, i);
            let idx = rs.simple_root_index(i);
            let refl = rs.reflect(idx, &w);
            let expected = Weight(
                w.0.iter()
                    .zip(&rs.root(idx).fund)
                    .map(|(a, b)| a - b)
                    .collect(),
            );
            assert_eq!(refl, expected);
            // Fixed hyperplane: weights orthogonal to the root do not move.
            let fixed = Weight::fundamental(3, (i + 2) % 3);
            if rs.pair_coroot(&fixed, idx) == 0 {
                assert_eq!(rs.reflect(idx, &fixed), fixed);
            }
        }
    }

    #[test]
    fn a3_adjacent_reflection_on_omega2() {
        // In A_3 (SL(4) conventions) s_{alpha_2} maps omega_2 = e_1+e_2 to e_1+e_3,
        // i.e. omega_2 - alpha_2 in lattice terms.
        let rs = RootSystem::new(Family::A, 3).unwrap();
        let w = Weight::fundamental(3, 1);
        let s = rs.reflect(rs.simple_root_index(1), &w);
        assert_eq!(
            s,
            w.sub(&Weight(rs.root(rs.simple_root_index(1)).fund.clone()))
        );
    }

    #[test]
    fn longest_element_inverts_all_positive_roots() {
        for (fam, rank, count) in [
            (Family::A, 3, 6),
            (Family::B, 2, 4),
            (Family::C, 3, 9),
            (Family::D, 4, 12),
            (Family::E6, 6, 36),
        ] {
            let rs = RootSystem::new(fam, rank).unwrap();
            let all: Vec<usize> = (0..rank).collect();
            let w0 = rs.longest_element(&all);
            assert_eq!(rs.length(&w0), count);
        }
    }

    #[test]
    fn inversion_sets() {
        let rs = RootSystem::new(Family::A, 3).unwrap();
        assert!(rs.inversions(&WeylElement::identity(3)).is_empty());
        for i in 0..3 {
            let idx = rs.simple_root_index(i);
            assert_eq!(rs.inversions(&rs.reflection(idx)), vec![idx]);
        }
    }

    #[test]
    fn weyl_action_preserves_norm() {
        let rs = RootSystem::new(Family::B, 3).unwrap();
        let w0 = rs.longest_element(&[0, 1, 2]);
        for r in rs.positive_roots() {
            let img = w0.apply_root(&r.simple);
            let neg: Vec<i64> = img.iter().map(|c| -c).collect();
            let idx = rs.root_index(&neg).expect("w0 negates positive roots");
            assert_eq!(rs.root(idx).norm2, r.norm2);
        }
    }

    #[test]
    fn unsupported_configurations_rejected() {
        assert!(RootSystem::new(Family::D, 2).is_err());
        assert!(RootSystem::new(Family::E6, 7).is_err());
        assert!(RootSystem::new(Family::B, 1).is_err());
    }
}
