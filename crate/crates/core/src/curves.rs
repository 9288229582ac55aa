//! Curve neighborhoods on shapes: the first-neighborhood map psi, its
//! iterates u(-d), and the distance d(u,v) that powers the quantum K-metric.

use crate::poset::{CominusculePoset, ShiftRule};
use crate::shapes::Shape;

/// First curve neighborhood u(-1): delete the boxes of I(z_1), then move
/// the survivors to the upper-left corner of P_X.
///
/// Panics if the translated box set is not an order ideal; that would mean
/// the tabulated shift for the family is wrong, not that the input is bad.
pub fn psi_shape(poset: &CominusculePoset, u: Shape) -> Shape {
    let survivors = u.difference(&poset.z1());
    let result = match poset.shift() {
        ShiftRule::ChainCollapse => {
            if survivors.is_empty() {
                Shape::EMPTY
            } else {
                let max_box = poset.dim() - 1;
                assert_eq!(
                    survivors,
                    Shape::EMPTY.with(max_box),
                    "quadric: a non-maximal box survived z_1 deletion"
                );
                Shape::EMPTY.with(0)
            }
        }
        ShiftRule::Translate { dr, dc } => {
            let mut bits = 0u64;
            for b in survivors.iter() {
                let info = &poset.boxes()[b];
                let target = poset
                    .box_at(info.row - dr, info.col - dc)
                    .unwrap_or_else(|| {
                        panic!(
                            "psi translation of box ({},{}) leaves the poset",
                            info.row, info.col
                        )
                    });
                bits |= 1 << target;
            }
            Shape::from_bits(bits)
        }
    };
    assert!(
        poset.is_ideal(result),
        "psi image is not an order ideal; shift table is wrong"
    );
    result
}

/// Iterated curve neighborhood u(-d); d = 0 is the identity.
pub fn curve_nbhd(poset: &CominusculePoset, u: Shape, d: usize) -> Shape {
    let mut s = u;
    for _ in 0..d {
        s = psi_shape(poset, s);
    }
    s
}

/// d(u,v) = min { d >= 0 : u(-d) <= v }.  Terminates because psi strictly
/// shrinks nonempty shapes (the minimal box always lies in z_1).
pub fn distance(poset: &CominusculePoset, u: Shape, v: Shape) -> usize {
    let mut s = u;
    let mut d = 0;
    loop {
        if s.leq(&v) {
            return d;
        }
        let next = psi_shape(poset, s);
        assert!(next.len() < s.len());
        s = next;
        d += 1;
    }
}

/// All-pairs distance table over a fixed shape enumeration.
pub fn distance_table(poset: &CominusculePoset, shapes: &[Shape]) -> Vec<Vec<usize>> {
    // Reuse the psi chain of each u across all v.
    shapes
        .iter()
        .map(|&u| {
            let mut chain = vec![u];
            while !chain.last().unwrap().is_empty() {
                chain.push(psi_shape(poset, *chain.last().unwrap()));
            }
            shapes
                .iter()
                .map(|v| chain.iter().position(|s| s.leq(v)).unwrap())
                .collect()
        })
        .collect()
}
