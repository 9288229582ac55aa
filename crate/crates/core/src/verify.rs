//! Exhaustive identity verification: quantum and classical duality, the
//! telescoping alpha identity, the weight lemma on chains, the curve
//! neighborhood branch law, structural shape counts, and the type A
//! distance cross-check against the quantum cohomology oracle.

use crate::curves::{distance_table, psi_shape};
use crate::gamma::{j_weight, sqrt_j, WeightPoly};
use crate::oracle;
use crate::poset::{CominusculePoset, SpaceKind};
use crate::qk::{
    alpha_identity_holds, classical_pairing, ideal_sheaf, psi_expr, quantized_ideal_sheaf, QPoly,
};
use crate::shapes::{self, enumerate_shapes, render_shape, Shape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Result of one checked instance (a pair, a shape, a chain).
#[derive(Debug, Clone)]
pub struct CheckItem {
    pub subject: String,
    pub ok: bool,
    pub detail: String,
}

/// Outcome of a verification suite over one space.
#[derive(Debug, Clone)]
pub struct CheckReport {
    pub label: String,
    pub items: Vec<CheckItem>,
}

impl CheckReport {
    pub fn checked(&self) -> usize {
        self.items.len()
    }

    pub fn failures(&self) -> Vec<&CheckItem> {
        self.items.iter().filter(|i| !i.ok).collect()
    }

    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.ok)
    }

    pub fn summary(&self, noun: &str) -> String {
        format!(
            "{} {noun} checked, {} failures",
            self.checked(),
            self.failures().len()
        )
    }
}

fn run_chunked<T: Sync, R: Send>(items: &[T], jobs: usize, f: impl Fn(&T) -> R + Sync) -> Vec<R> {
    let jobs = jobs.max(1);
    if jobs == 1 || items.len() < 2 {
        return items.iter().map(&f).collect();
    }
    let chunk = items.len().div_ceil(jobs);
    let mut results: Vec<Vec<R>> = Vec::new();
    std::thread::scope(|scope| {
        let handles: Vec<_> = items
            .chunks(chunk)
            .map(|c| scope.spawn(|| c.iter().map(&f).collect::<Vec<R>>()))
            .collect();
        results = handles.into_iter().map(|h| h.join().unwrap()).collect();
    });
    results.into_iter().flatten().collect()
}

/// Quantum duality: ((O_lambda, I_q^mu)) = delta, as the exact polynomial
/// identity  sum_nu eps_nu q^{qdeg + d(nu,lambda)} = delta (1 - q).
pub fn verify_duality(poset: &CominusculePoset, jobs: usize) -> CheckReport {
    let shapes = enumerate_shapes(poset);
    let dist = distance_table(poset, &shapes);
    let index = |s: Shape| shapes.iter().position(|&t| t == s).unwrap();
    let rank = poset.root_system().rank;
    let qideals: Vec<_> = shapes
        .iter()
        .map(|&mu| quantized_ideal_sheaf(poset, mu))
        .collect();

    let one = QPoly::constant(rank, 1);
    let one_minus_q = one.sub(&one.mul_q(1));
    let pairs: Vec<(usize, usize)> = (0..shapes.len())
        .flat_map(|l| (0..shapes.len()).map(move |m| (l, m)))
        .collect();
    let items = run_chunked(&pairs, jobs, |&(l, m)| {
        let mut paired = QPoly::zero();
        for (nu, q) in qideals[m].terms() {
            paired = paired.add(&q.mul_q(dist[index(nu)][l]));
        }
        let expected = if l == m {
            one_minus_q.clone()
        } else {
            QPoly::zero()
        };
        let ok = paired == expected;
        CheckItem {
            subject: format!(
                "lambda={} mu={}",
                render_shape(poset, shapes[l]),
                render_shape(poset, shapes[m])
            ),
            ok,
            detail: if ok {
                String::new()
            } else {
                format!("pairing polynomial {paired:?}, expected {expected:?}")
            },
        }
    });
    CheckReport {
        label: format!("{} duality", poset.kind()),
        items,
    }
}

/// Classical duality: (I^mu, O_lambda) = delta under the sheaf Euler
/// characteristic.
pub fn verify_classical(poset: &CominusculePoset, jobs: usize) -> CheckReport {
    let shapes = enumerate_shapes(poset);
    let rank = poset.root_system().rank;
    let pairs: Vec<(Shape, Shape)> = shapes
        .iter()
        .flat_map(|&l| shapes.iter().map(move |&m| (l, m)))
        .collect();
    let items = run_chunked(&pairs, jobs, |&(lam, mu)| {
        let val = classical_pairing(poset, &ideal_sheaf(poset, mu), lam).unwrap();
        let expected = if lam == mu {
            WeightPoly::constant(rank, 1)
        } else {
            WeightPoly::zero()
        };
        let ok = val == expected;
        CheckItem {
            subject: format!(
                "lambda={} mu={}",
                render_shape(poset, lam),
                render_shape(poset, mu)
            ),
            ok,
            detail: if ok {
                String::new()
            } else {
                format!("pairing {val:?}")
            },
        }
    });
    CheckReport {
        label: format!("{} classical duality", poset.kind()),
        items,
    }
}

/// The equivariant telescoping identity for alpha^mu, every mu.
pub fn verify_alpha(poset: &CominusculePoset, jobs: usize) -> CheckReport {
    let shapes = enumerate_shapes(poset);
    let items = run_chunked(&shapes, jobs, |&mu| CheckItem {
        subject: format!("mu={}", render_shape(poset, mu)),
        ok: alpha_identity_holds(poset, mu),
        detail: String::new(),
    });
    CheckReport {
        label: format!("{} alpha identity", poset.kind()),
        items,
    }
}

/// How chains are drawn for the weight-lemma check.
#[derive(Debug, Clone, Copy)]
pub enum ChainSample {
    Exhaustive,
    Random { count: usize, seed: u64 },
}

/// Lemma: sqrt(J_u J_v) sqrt(J_v J_w) / J_v = sqrt(J_u J_w) on chains
/// u <= v <= w.
pub fn verify_lemma_weight(poset: &CominusculePoset, sample: ChainSample) -> CheckReport {
    let shapes = enumerate_shapes(poset);
    let mut chains: Vec<(Shape, Shape, Shape)> = Vec::new();
    match sample {
        ChainSample::Exhaustive => {
            for &u in &shapes {
                for &v in &shapes {
                    if !u.leq(&v) {
                        continue;
                    }
                    for &w in &shapes {
                        if v.leq(&w) {
                            chains.push((u, v, w));
                        }
                    }
                }
            }
        }
        ChainSample::Random { count, seed } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            while chains.len() < count {
                let w = shapes[rng.gen_range(0..shapes.len())];
                let below_w: Vec<Shape> = shapes.iter().copied().filter(|s| s.leq(&w)).collect();
                let v = below_w[rng.gen_range(0..below_w.len())];
                let below_v: Vec<Shape> = below_w.iter().copied().filter(|s| s.leq(&v)).collect();
                let u = below_v[rng.gen_range(0..below_v.len())];
                chains.push((u, v, w));
            }
        }
    }
    let items = chains
        .iter()
        .map(|&(u, v, w)| {
            let lhs = sqrt_j(poset, u, v)
                .unwrap()
                .mul(&sqrt_j(poset, v, w).unwrap())
                .div(&j_weight(poset, v));
            let rhs = sqrt_j(poset, u, w).unwrap();
            CheckItem {
                subject: format!(
                    "u={} v={} w={}",
                    render_shape(poset, u),
                    render_shape(poset, v),
                    render_shape(poset, w)
                ),
                ok: lhs == rhs,
                detail: String::new(),
            }
        })
        .collect();
    CheckReport {
        label: format!("{} weight lemma", poset.kind()),
        items,
    }
}

/// The curve-neighborhood branch law in its strong form: psi I^mu = 0 iff z_1 is not
/// below mu, and psi I^mu = I^{mu(-1)} when it is.
///
/// The vanishing half always holds.  The identification with I^{mu(-1)}
/// fails for shapes near the top of the Bruhat order (see
/// `quantized_ideal_sheaf`), so this report is expected to carry failures;
/// duality decides which side is right, and it sides with the termwise sum.
pub fn verify_branch_law(poset: &CominusculePoset, jobs: usize) -> CheckReport {
    let shapes = enumerate_shapes(poset);
    let items = run_chunked(&shapes, jobs, |&mu| {
        let correction = psi_expr(poset, &ideal_sheaf(poset, mu)).unwrap();
        let z1_below = poset.z1().leq(&mu);
        let vanishing_ok = correction.is_zero() == !z1_below;
        let (identified_ok, detail) = if z1_below {
            let claimed = ideal_sheaf(poset, psi_shape(poset, mu));
            if correction == claimed {
                (true, String::new())
            } else {
                (
                    false,
                    format!(
                        "psi I^mu has {} terms but I^(mu(-1)) has {}",
                        correction.num_terms(),
                        claimed.num_terms()
                    ),
                )
            }
        } else {
            (true, String::new())
        };
        CheckItem {
            subject: format!("mu={}", render_shape(poset, mu)),
            ok: vanishing_ok && identified_ok,
            detail,
        }
    });
    CheckReport {
        label: format!("{} branch law", poset.kind()),
        items,
    }
}

/// Only the vanishing half of the branch law: psi I^mu = 0 iff z_1 is not
/// contained in mu.
pub fn verify_psi_vanishing(poset: &CominusculePoset, jobs: usize) -> CheckReport {
    let shapes = enumerate_shapes(poset);
    let items = run_chunked(&shapes, jobs, |&mu| {
        let correction = psi_expr(poset, &ideal_sheaf(poset, mu)).unwrap();
        CheckItem {
            subject: format!("mu={}", render_shape(poset, mu)),
            ok: correction.is_zero() == !poset.z1().leq(&mu),
            detail: String::new(),
        }
    });
    CheckReport {
        label: format!("{} psi vanishing", poset.kind()),
        items,
    }
}

/// Counts the order ideals of the poset without constructing them, through
/// the antichain recursion: ideals correspond to antichains of maximal
/// elements.  Independent of the breadth-first enumerator.
pub fn count_ideals_independent(poset: &CominusculePoset) -> u64 {
    fn count(poset: &CominusculePoset, available: u64) -> u64 {
        if available == 0 {
            return 1;
        }
        let x = available.trailing_zeros() as usize;
        // Antichains not containing x, plus those containing x (which then
        // exclude everything comparable to x).
        let without = available & !(1u64 << x);
        let mut incomparable = without;
        for j in 0..poset.dim() {
            if poset.leq_boxes(x, j) || poset.leq_boxes(j, x) {
                incomparable &= !(1u64 << j);
            }
        }
        count(poset, without) + count(poset, incomparable)
    }
    let all = poset.full_shape().bits();
    count(poset, all)
}

/// Expected number of shapes per family: binomials and powers of two in
/// the classical cases, regression constants for quadrics and E-types.
pub fn expected_shape_count(kind: SpaceKind) -> u64 {
    fn binom(n: usize, k: usize) -> u64 {
        let mut out = 1u64;
        for i in 0..k {
            out = out * (n - i) as u64 / (i + 1) as u64;
        }
        out
    }
    match kind {
        SpaceKind::Grassmannian { k, n } => binom(n, k),
        SpaceKind::Lagrangian { n } => 1 << n,
        SpaceKind::Orthogonal { n } => 1 << (n - 1),
        // |W^P| is dim+2 for even quadrics but dim+1 for odd ones (the odd
        // poset is a chain).
        SpaceKind::QuadricEven { dim } => dim as u64 + 2,
        SpaceKind::QuadricOdd { dim } => dim as u64 + 1,
        SpaceKind::CayleyPlane => 27,
        SpaceKind::Freudenthal => 56,
    }
}

/// Structural checks: shape counts against both the closed form and the
/// independent ideal count, and the involution (z_1 w_P)^2 = 1.
pub fn verify_structure(poset: &CominusculePoset) -> CheckReport {
    let mut items = Vec::new();
    let enumerated = enumerate_shapes(poset).len() as u64;
    let expected = expected_shape_count(poset.kind());
    let independent = count_ideals_independent(poset);
    items.push(CheckItem {
        subject: "shape count".to_string(),
        ok: enumerated == expected && independent == expected,
        detail: format!("enumerated {enumerated}, brute force {independent}, expected {expected}"),
    });
    let z1wp = shapes::to_weyl(poset, poset.z1()).compose(&shapes::w_p(poset));
    items.push(CheckItem {
        subject: "(z1 wP)^2 = 1".to_string(),
        ok: z1wp.compose(&z1wp).is_identity(),
        detail: String::new(),
    });
    CheckReport {
        label: format!("{} structure", poset.kind()),
        items,
    }
}

/// Cross-check of the poset distance against the rim-hook oracle over all
/// shape pairs of Gr(k,n).
pub fn verify_distance_oracle(poset: &CominusculePoset, jobs: usize) -> CheckReport {
    let (k, n) = match poset.kind() {
        SpaceKind::Grassmannian { k, n } => (k, n),
        other => panic!("distance oracle is type A only, got {other}"),
    };
    let shapes = enumerate_shapes(poset);
    let dist = distance_table(poset, &shapes);
    let pairs: Vec<(usize, usize)> = (0..shapes.len())
        .flat_map(|m| (0..shapes.len()).map(move |l| (m, l)))
        .collect();
    let items = run_chunked(&pairs, jobs, |&(m, l)| {
        let mu = shapes::shape_to_parts(poset, shapes[m]);
        let lam = shapes::shape_to_parts(poset, shapes[l]);
        let expected = oracle::distance_oracle(k, n, &mu, &lam);
        let got = dist[m][l];
        CheckItem {
            subject: format!("mu={mu:?} lambda={lam:?}"),
            ok: got == expected,
            detail: if got == expected {
                String::new()
            } else {
                format!("poset distance {got}, oracle {expected}")
            },
        }
    });
    CheckReport {
        label: format!("Gr({k},{n}) distance oracle"),
        items,
    }
}
