//! Independent quantum cohomology of Gr(k,n) via classical
//! Littlewood-Richardson coefficients and the rim-hook rule.
//!
//! This module certifies the curve-neighborhood distance: the minimal
//! q-degree of X^mu * X^{lambda-complement} must match the poset-side
//! computation for every pair of shapes.  Nothing here touches posets,
//! Weyl groups or the psi map — partitions go in, q-degrees come out.

use std::collections::BTreeMap;

/// A partition as weakly decreasing positive parts.
pub type Partition = Vec<usize>;

fn part(p: &[usize], i: usize) -> usize {
    p.get(i).copied().unwrap_or(0)
}

pub fn is_partition(p: &[usize]) -> bool {
    p.windows(2).all(|w| w[0] >= w[1]) && p.iter().all(|&x| x > 0)
}

pub fn fits_in_box(p: &[usize], k: usize, n: usize) -> bool {
    is_partition(p) && p.len() <= k && part(p, 0) <= n - k
}

/// The complement of lambda in the k x (n-k) box, rotated; this indexes the
/// Poincare-dual Schubert class.
pub fn complement(lambda: &[usize], k: usize, n: usize) -> Partition {
    let mut out: Vec<usize> = (0..k).map(|i| n - k - part(lambda, k - 1 - i)).collect();
    while out.last() == Some(&0) {
        out.pop();
    }
    out
}

/// Counts Littlewood-Richardson skew tableaux of shape nu/lambda and
/// content mu: semistandard, with the reverse reading word a lattice word.
/// Cells are filled in reverse reading order so that all three conditions
/// check incrementally.
fn lr_count(nu: &[usize], lambda: &[usize], mu: &[usize]) -> i64 {
    let rows = nu.len();
    let mut cells: Vec<(usize, usize)> = Vec::new();
    for (r, &len) in nu.iter().enumerate() {
        let lo = part(lambda, r);
        // Right to left within the row.
        for c in (lo..len).rev() {
            cells.push((r, c));
        }
    }
    let mut grid = vec![vec![0usize; part(nu, 0)]; rows];
    let mut counts = vec![0usize; mu.len() + 1];

    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        lambda: &[usize],
        mu: &[usize],
        grid: &mut Vec<Vec<usize>>,
        counts: &mut Vec<usize>,
    ) -> i64 {
        if idx == cells.len() {
            return 1;
        }
        let (r, c) = cells[idx];
        let mut total = 0;
        for v in 1..=mu.len() {
            if counts[v] >= mu[v - 1] {
                continue;
            }
            // Lattice condition on the reverse reading word.
            if v > 1 && counts[v] >= counts[v - 1] {
                continue;
            }
            // Weak increase along the row (the right neighbor is filled).
            if c + 1 < grid[r].len() && grid[r][c + 1] != 0 && v > grid[r][c + 1] {
                continue;
            }
            // Strict increase down the column (the cell above is filled
            // unless it belongs to the inner shape).
            if r > 0 && c >= part(lambda, r - 1) {
                let above = grid[r - 1][c];
                if above == 0 || v <= above {
                    continue;
                }
            }
            grid[r][c] = v;
            counts[v] += 1;
            total += rec(idx + 1, cells, lambda, mu, grid, counts);
            counts[v] -= 1;
            grid[r][c] = 0;
        }
        total
    }

    rec(0, &cells, lambda, mu, &mut grid, &mut counts)
}

/// Classical Littlewood-Richardson expansion of s_lambda * s_mu truncated
/// to partitions with at most `max_rows` rows (the row bound in the
/// cohomology of Gr(max_rows, -)); column widths are unbounded.
pub fn lr_product(lambda: &[usize], mu: &[usize], max_rows: usize) -> BTreeMap<Partition, i64> {
    assert!(is_partition(lambda));
    assert!(is_partition(mu));
    if mu.is_empty() {
        let mut out = BTreeMap::new();
        if lambda.len() <= max_rows {
            out.insert(lambda.to_vec(), 1);
        }
        return out;
    }
    let total: usize = lambda.iter().sum::<usize>() + mu.iter().sum::<usize>();
    let width = part(lambda, 0) + part(mu, 0);
    let mut out = BTreeMap::new();
    let mut nu: Vec<usize> = Vec::new();
    enumerate_supershapes(&mut nu, total, width, max_rows, lambda, &mut |nu| {
        let c = lr_count(nu, lambda, mu);
        if c != 0 {
            out.insert(nu.to_vec(), c);
        }
    });
    out
}

/// All partitions of `total` with at most `max_rows` rows, first part at
/// most `width`, containing `lambda`.
fn enumerate_supershapes(
    nu: &mut Vec<usize>,
    remaining: usize,
    width: usize,
    max_rows: usize,
    lambda: &[usize],
    f: &mut impl FnMut(&[usize]),
) {
    if remaining == 0 {
        if nu.len() >= lambda.len() {
            f(nu);
        }
        return;
    }
    if nu.len() == max_rows {
        return;
    }
    let cap = if nu.is_empty() {
        width
    } else {
        nu[nu.len() - 1]
    };
    let lo = part(lambda, nu.len()).max(1);
    for next in (lo..=cap.min(remaining)).rev() {
        // Feasibility: the rows below must be able to absorb the rest.
        let rows_left = max_rows - nu.len() - 1;
        if remaining - next > rows_left * next {
            continue;
        }
        nu.push(next);
        enumerate_supershapes(nu, remaining - next, width, max_rows, lambda, f);
        nu.pop();
    }
}

/// Strips n-rim-hooks from a partition with at most k rows until it fits in
/// the k x (n-k) box, returning (sign, number of hooks, reduced partition),
/// or None when the reduction collides (the term contributes zero).
///
/// Works on the beta-number abacus: removing an n-hook of height h moves
/// one bead down n positions past h-1 others, and contributes the sign
/// (-1)^{k-h}; the total is the bead-permutation sign times
/// (-1)^{d(k-1)} for d hooks.
pub fn rim_hook_reduce(nu: &[usize], k: usize, n: usize) -> Option<(i64, usize, Partition)> {
    assert!(nu.len() <= k);
    let mut beads: Vec<i64> = (0..k)
        .map(|i| part(nu, i) as i64 + (k - 1 - i) as i64)
        .collect();
    // All beads must land below n, one per residue class mod n.
    {
        let mut residues: Vec<i64> = beads.iter().map(|b| b.rem_euclid(n as i64)).collect();
        residues.sort_unstable();
        residues.dedup();
        if residues.len() != k {
            return None;
        }
    }
    let mut sign = 1i64;
    let mut hooks = 0usize;
    loop {
        let movable =
            (0..k).find(|&i| beads[i] >= n as i64 && !beads.contains(&(beads[i] - n as i64)));
        match movable {
            None => break,
            Some(i) => {
                let from = beads[i];
                let to = from - n as i64;
                let jumped = beads.iter().filter(|&&b| b > to && b < from).count();
                if jumped % 2 == 1 {
                    sign = -sign;
                }
                beads[i] = to;
                hooks += 1;
            }
        }
    }
    debug_assert!(beads.iter().all(|&b| b < n as i64));
    if hooks * (k - 1) % 2 == 1 {
        sign = -sign;
    }
    let mut sorted = beads;
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    let mut reduced: Vec<usize> = (0..k)
        .map(|i| (sorted[i] - (k - 1 - i) as i64) as usize)
        .collect();
    while reduced.last() == Some(&0) {
        reduced.pop();
    }
    debug_assert!(fits_in_box(&reduced, k, n) || reduced.is_empty());
    Some((sign, hooks, reduced))
}

/// The quantum cohomology product X^lambda * X^mu in QH(Gr(k,n)), as a map
/// (partition, q-degree) -> coefficient.  Panics if a coefficient survives
/// with a negative sign; quantum Littlewood-Richardson coefficients of
/// Grassmannians are nonnegative, so that would be an implementation bug.
pub fn quantum_product(
    k: usize,
    n: usize,
    lambda: &[usize],
    mu: &[usize],
) -> BTreeMap<(Partition, usize), i64> {
    assert!(fits_in_box(lambda, k, n));
    assert!(fits_in_box(mu, k, n));
    let mut out: BTreeMap<(Partition, usize), i64> = BTreeMap::new();
    for (nu, c) in lr_product(lambda, mu, k) {
        if let Some((sign, d, reduced)) = rim_hook_reduce(&nu, k, n) {
            use std::collections::btree_map::Entry;
            match out.entry((reduced, d)) {
                Entry::Vacant(e) => {
                    e.insert(sign * c);
                }
                Entry::Occupied(mut e) => {
                    *e.get_mut() += sign * c;
                    if *e.get() == 0 {
                        e.remove();
                    }
                }
            }
        }
    }
    for ((p, d), &c) in &out {
        assert!(c > 0, "negative quantum coefficient {c} at {p:?} q^{d}");
    }
    out
}

/// The minimal q-degree in X^mu * X_lambda, computed over the quantum
/// cohomology ring with X_lambda = X^{complement(lambda)}.
pub fn distance_oracle(k: usize, n: usize, mu: &[usize], lambda: &[usize]) -> usize {
    let dual = complement(lambda, k, n);
    let product = quantum_product(k, n, mu, &dual);
    assert!(
        !product.is_empty(),
        "vanishing quantum product at {mu:?} * {dual:?}"
    );
    product.keys().map(|(_, d)| *d).min().unwrap()
}
