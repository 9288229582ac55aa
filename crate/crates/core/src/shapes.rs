//! Shapes: lower order ideals of P_X, in bijection with the minimal coset
//! representatives W^P.
//!
//! A shape is a bitset over the poset's fixed linear extension, so the same
//! representation serves Young diagrams (type A), shifted diagrams (types
//! B/C/D) and the exceptional posets.  Partition notation is a rendering
//! concern handled at the end of this module.

use crate::error::{Error, Result};
use crate::poset::{CominusculePoset, SpaceKind};
use crate::roots::WeylElement;
use std::fmt;

/// A lower order ideal of P_X, stored as a bitset over the linear extension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Shape {
    bits: u64,
}

impl Shape {
    pub const EMPTY: Shape = Shape { bits: 0 };

    pub fn from_bits(bits: u64) -> Shape {
        Shape { bits }
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits >> i & 1 == 1
    }

    /// Number of boxes; the length of the Weyl group element.
    pub fn len(&self) -> usize {
        self.bits.count_ones() as usize
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn with(&self, i: usize) -> Shape {
        Shape {
            bits: self.bits | 1 << i,
        }
    }

    pub fn without(&self, i: usize) -> Shape {
        Shape {
            bits: self.bits & !(1 << i),
        }
    }

    /// Containment of ideals; this is the Bruhat order on W^P.
    pub fn leq(&self, other: &Shape) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn union(&self, other: &Shape) -> Shape {
        Shape {
            bits: self.bits | other.bits,
        }
    }

    pub fn difference(&self, other: &Shape) -> Shape {
        Shape {
            bits: self.bits & !other.bits,
        }
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        (0..64).filter(move |&i| self.contains(i))
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Shape({:#x})", self.bits)
    }
}

/// Enumerates all lower order ideals of P_X, sorted by (length, bitset).
pub fn enumerate_shapes(poset: &CominusculePoset) -> Vec<Shape> {
    let mut seen = std::collections::BTreeSet::new();
    seen.insert(Shape::EMPTY);
    let mut frontier = vec![Shape::EMPTY];
    while let Some(s) = frontier.pop() {
        for b in poset.addable_boxes(s) {
            let t = s.with(b);
            if seen.insert(t) {
                frontier.push(t);
            }
        }
    }
    let mut shapes: Vec<Shape> = seen.into_iter().collect();
    shapes.sort_by_key(|s| (s.len(), s.bits()));
    shapes
}

/// Classification of a difference of ideals I(w) \ I(u).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkewKind {
    NotContained,
    SkewShape,
    ShortSkewShape,
    RookStrip,
    ShortRookStrip,
    Empty,
}

#[derive(Debug, Clone)]
pub struct SkewClass {
    pub kind: SkewKind,
    /// Box indices of I(w) \ I(u); empty unless u <= w.
    pub boxes: Vec<usize>,
}

impl SkewKind {
    pub fn is_contained(&self) -> bool {
        !matches!(self, SkewKind::NotContained)
    }

    /// Pairwise incomparable boxes; the empty skew shape counts.
    pub fn is_rook_strip(&self) -> bool {
        matches!(
            self,
            SkewKind::RookStrip | SkewKind::ShortRookStrip | SkewKind::Empty
        )
    }

    /// All boxes short; the empty skew shape counts.
    pub fn is_short_skew(&self) -> bool {
        matches!(
            self,
            SkewKind::ShortSkewShape | SkewKind::ShortRookStrip | SkewKind::Empty
        )
    }

    pub fn is_short_rook_strip(&self) -> bool {
        matches!(self, SkewKind::ShortRookStrip | SkewKind::Empty)
    }
}

/// Finest classification of w/u.
pub fn classify_skew(poset: &CominusculePoset, w: Shape, u: Shape) -> SkewClass {
    if !u.leq(&w) {
        return SkewClass {
            kind: SkewKind::NotContained,
            boxes: Vec::new(),
        };
    }
    let boxes: Vec<usize> = w.difference(&u).iter().collect();
    if boxes.is_empty() {
        return SkewClass {
            kind: SkewKind::Empty,
            boxes,
        };
    }
    let all_short = boxes.iter().all(|&b| poset.boxes()[b].short);
    let antichain = boxes
        .iter()
        .all(|&a| boxes.iter().all(|&b| a == b || !poset.leq_boxes(a, b)));
    let kind = match (antichain, all_short) {
        (true, true) => SkewKind::ShortRookStrip,
        (true, false) => SkewKind::RookStrip,
        (false, true) => SkewKind::ShortSkewShape,
        (false, false) => SkewKind::SkewShape,
    };
    SkewClass { kind, boxes }
}

/// The Weyl group element w_lambda, the product of reflections in the boxes
/// of the ideal taken along the linear extension (minimal boxes act last).
pub fn to_weyl(poset: &CominusculePoset, s: Shape) -> WeylElement {
    let rs = poset.root_system();
    let mut w = WeylElement::identity(rs.rank);
    for b in s.iter() {
        w = w.compose(&rs.reflection(poset.boxes()[b].root_idx));
    }
    w
}

/// Recovers the shape of an element of W^P from its inversion set.
pub fn from_weyl(poset: &CominusculePoset, w: &WeylElement) -> Result<Shape> {
    let rs = poset.root_system();
    let inv = rs.inversions(w);
    let mut bits = 0u64;
    for root_idx in inv {
        match poset.boxes().iter().position(|b| b.root_idx == root_idx) {
            Some(i) => bits |= 1 << i,
            None => {
                return Err(Error::Domain(
                    "element is not a minimal coset representative: inversion outside P_X"
                        .to_string(),
                ))
            }
        }
    }
    let s = Shape::from_bits(bits);
    if !poset.is_ideal(s) {
        return Err(Error::Domain(
            "inversion set inside P_X is not an order ideal".to_string(),
        ));
    }
    Ok(s)
}

/// Longest element of the parabolic Weyl group W_P.
pub fn w_p(poset: &CominusculePoset) -> WeylElement {
    let rs = poset.root_system();
    let gamma = poset.space().gamma_index();
    let subset: Vec<usize> = (0..rs.rank).filter(|&i| i != gamma).collect();
    rs.longest_element(&subset)
}

/// Longest element of the full Weyl group.
pub fn w_0(poset: &CominusculePoset) -> WeylElement {
    let rs = poset.root_system();
    let all: Vec<usize> = (0..rs.rank).collect();
    rs.longest_element(&all)
}

/// The dual shape, computed through the Weyl group as w_0 w_lambda w_P.
pub fn dual(poset: &CominusculePoset, s: Shape) -> Shape {
    let w = w_0(poset).compose(&to_weyl(poset, s)).compose(&w_p(poset));
    from_weyl(poset, &w).expect("w_0 u w_P lies in W^P")
}

/// Adds one box; the result must remain an order ideal.
pub fn add_box(poset: &CominusculePoset, s: Shape, b: usize) -> Result<Shape> {
    if b >= poset.dim() {
        return Err(Error::Domain(format!("box index {b} out of range")));
    }
    if s.contains(b) {
        return Err(Error::Domain(
            "box already present in the shape".to_string(),
        ));
    }
    let t = s.with(b);
    if !poset.is_ideal(t) {
        return Err(Error::Domain(
            "adding this box does not produce an order ideal".to_string(),
        ));
    }
    Ok(t)
}

/// Removes one box; the result must remain an order ideal.
pub fn remove_box(poset: &CominusculePoset, s: Shape, b: usize) -> Result<Shape> {
    if b >= poset.dim() || !s.contains(b) {
        return Err(Error::Domain("box not present in the shape".to_string()));
    }
    let t = s.without(b);
    if !poset.is_ideal(t) {
        return Err(Error::Domain(
            "removing this box does not produce an order ideal".to_string(),
        ));
    }
    Ok(t)
}

// ---------------------------------------------------------------------------
// Partition notation.

/// Boxes per grid row of a shape, indexed from row 1.
fn row_counts(poset: &CominusculePoset, s: Shape) -> Vec<usize> {
    let max_row = poset.boxes().iter().map(|b| b.row).max().unwrap_or(0);
    let mut counts = vec![0usize; max_row];
    for i in s.iter() {
        counts[poset.boxes()[i].row - 1] += 1;
    }
    counts
}

/// Row lengths of a shape with trailing zero rows trimmed; the partition
/// (or strict partition, or segment list) of the family's notation.
pub fn shape_to_parts(poset: &CominusculePoset, s: Shape) -> Vec<usize> {
    let mut counts = row_counts(poset, s);
    while counts.last() == Some(&0) {
        counts.pop();
    }
    counts
}

/// Renders a shape in the family's conventional notation: partitions for
/// type A, strict partitions for LG/OG, per-segment row lengths for
/// quadrics, explicit box lists for the exceptional spaces.
pub fn render_shape(poset: &CominusculePoset, s: Shape) -> String {
    match poset.kind() {
        SpaceKind::CayleyPlane | SpaceKind::Freudenthal => {
            let cells: Vec<String> = s
                .iter()
                .map(|i| {
                    let b = &poset.boxes()[i];
                    format!("[{},{}]", b.row, b.col)
                })
                .collect();
            format!("{{boxes:[{}]}}", cells.join(","))
        }
        _ => {
            let counts = row_counts(poset, s);
            let parts: Vec<String> = counts
                .iter()
                .take_while(|&&c| c > 0)
                .map(|c| c.to_string())
                .collect();
            format!("[{}]", parts.join(","))
        }
    }
}

/// Parses the literal forms accepted on the command line and in JSON:
/// `[]`, `[3,2,1]`, or `{boxes:[[r,c],...]}`.
pub fn parse_shape(poset: &CominusculePoset, text: &str) -> Result<Shape> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if t.starts_with('{') {
        return parse_box_list(poset, &t);
    }
    if !t.starts_with('[') || !t.ends_with(']') {
        return Err(Error::Parse(format!(
            "shape literal `{text}` must be [..] or {{boxes:..}}"
        )));
    }
    let inner = &t[1..t.len() - 1];
    let parts: Vec<usize> = if inner.is_empty() {
        Vec::new()
    } else {
        inner
            .split(',')
            .map(|p| {
                p.parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part `{p}` in shape `{text}`")))
            })
            .collect::<Result<_>>()?
    };
    shape_from_parts(poset, &parts)
}

/// Builds a shape from per-row lengths in the family's convention.
pub fn shape_from_parts(poset: &CominusculePoset, parts: &[usize]) -> Result<Shape> {
    let mut bits = 0u64;
    let bad_row = |r: usize| Error::Domain(format!("row {r} is outside the poset"));
    let mut set = |r: usize, c: usize| -> Result<()> {
        match poset.box_at(r, c) {
            Some(i) => {
                bits |= 1 << i;
                Ok(())
            }
            None => Err(Error::Domain(format!("box ({r},{c}) is outside the poset"))),
        }
    };
    match poset.kind() {
        SpaceKind::Grassmannian { .. } => {
            for w in parts.windows(2) {
                if w[0] < w[1] {
                    return Err(Error::Domain(
                        "partition parts must be weakly decreasing".into(),
                    ));
                }
            }
            for (r0, &len) in parts.iter().enumerate() {
                for c in 1..=len {
                    set(r0 + 1, c)?;
                }
            }
        }
        SpaceKind::Lagrangian { .. } | SpaceKind::Orthogonal { .. } => {
            for w in parts.windows(2) {
                if w[1] > 0 && w[0] <= w[1] {
                    return Err(Error::Domain(
                        "strict partition parts must strictly decrease".into(),
                    ));
                }
            }
            for (r0, &len) in parts.iter().enumerate() {
                let r = r0 + 1;
                for c in r..r + len {
                    set(r, c)?;
                }
            }
        }
        SpaceKind::QuadricOdd { .. } | SpaceKind::QuadricEven { .. } => {
            if parts.len() > 2 {
                return Err(Error::Domain(
                    "quadric shapes have at most two segments".into(),
                ));
            }
            if let Some(&a) = parts.first() {
                for c in 1..=a {
                    set(1, c)?;
                }
            }
            if parts.len() == 2 && parts[1] > 0 {
                let start = match poset.kind() {
                    SpaceKind::QuadricEven { dim } => dim / 2 - 1,
                    _ => return Err(bad_row(2)),
                };
                for c in start..start + parts[1] {
                    set(2, c)?;
                }
            }
        }
        SpaceKind::CayleyPlane | SpaceKind::Freudenthal => {
            return Err(Error::Parse(
                "exceptional shapes use the explicit {boxes:[[r,c],...]} form".into(),
            ));
        }
    }
    let s = Shape::from_bits(bits);
    if !poset.is_ideal(s) {
        return Err(Error::Domain(
            "the given diagram is not a lower order ideal".into(),
        ));
    }
    Ok(s)
}

fn parse_box_list(poset: &CominusculePoset, t: &str) -> Result<Shape> {
    let bad = || Error::Parse(format!("bad box-list shape literal `{t}`"));
    let inner = t
        .strip_prefix('{')
        .and_then(|s| s.strip_suffix('}'))
        .ok_or_else(bad)?;
    let inner = inner
        .strip_prefix("boxes:")
        .or_else(|| inner.strip_prefix("\"boxes\":"))
        .ok_or_else(bad)?;
    let inner = inner
        .strip_prefix('[')
        .and_then(|s| s.strip_suffix(']'))
        .ok_or_else(bad)?;
    let mut bits = 0u64;
    if !inner.is_empty() {
        for pair in inner.split("],") {
            let pair = pair.trim_start_matches('[').trim_end_matches(']');
            let nums: Vec<usize> = pair
                .split(',')
                .map(|p| p.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?;
            if nums.len() != 2 {
                return Err(bad());
            }
            let i = poset.box_at(nums[0], nums[1]).ok_or_else(|| {
                Error::Domain(format!("box ({},{}) outside the poset", nums[0], nums[1]))
            })?;
            bits |= 1 << i;
        }
    }
    let s = Shape::from_bits(bits);
    if !poset.is_ideal(s) {
        return Err(Error::Domain(
            "the given box set is not a lower order ideal".into(),
        ));
    }
    Ok(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poset::build_poset;

    fn gr24() -> CominusculePoset {
        build_poset(SpaceKind::Grassmannian { k: 2, n: 4 }).unwrap()
    }

    fn lg4() -> CominusculePoset {
        build_poset(SpaceKind::Lagrangian { n: 4 }).unwrap()
    }

    fn sh(p: &CominusculePoset, lit: &str) -> Shape {
        parse_shape(p, lit).unwrap()
    }

    #[test]
    fn gr24_has_six_shapes() {
        let p = gr24();
        let shapes = enumerate_shapes(&p);
        assert_eq!(shapes.len(), 6);
        let lits: Vec<String> = shapes.iter().map(|&s| render_shape(&p, s)).collect();
        assert_eq!(lits, ["[]", "[1]", "[2]", "[1,1]", "[2,1]", "[2,2]"]);
    }

    #[test]
    fn binomial_counts() {
        for (k, n) in [(2usize, 5usize), (3, 6), (3, 7)] {
            let p = build_poset(SpaceKind::Grassmannian { k, n }).unwrap();
            let expect = (1..=n).product::<usize>()
                / ((1..=k).product::<usize>() * (1..=n - k).product::<usize>());
            assert_eq!(enumerate_shapes(&p).len(), expect);
        }
    }

    #[test]
    fn freudenthal_count() {
        let p = build_poset(SpaceKind::Freudenthal).unwrap();
        assert_eq!(enumerate_shapes(&p).len(), 56);
    }

    #[test]
    fn skew_classification_lagrangian() {
        let p = lg4();
        // (3,2,1)/(3,2): one long box, so a rook strip but not short.
        let c = classify_skew(&p, sh(&p, "[3,2,1]"), sh(&p, "[3,2]"));
        assert_eq!(c.kind, SkewKind::RookStrip);
        assert!(!c.kind.is_short_rook_strip());
        // (4,3)/(3,2): two comparable short boxes.
        let c = classify_skew(&p, sh(&p, "[4,3]"), sh(&p, "[3,2]"));
        assert_eq!(c.kind, SkewKind::ShortSkewShape);
        // u/u is the empty rook strip.
        let u = sh(&p, "[4,2]");
        let c = classify_skew(&p, u, u);
        assert_eq!(c.kind, SkewKind::Empty);
        assert!(c.kind.is_rook_strip() && c.kind.is_short_skew());
        // Containment failure.
        let c = classify_skew(&p, sh(&p, "[3,2]"), sh(&p, "[4,3]"));
        assert_eq!(c.kind, SkewKind::NotContained);
    }

    #[test]
    fn skew_classification_grassmannian() {
        let p = gr24();
        let c = classify_skew(&p, sh(&p, "[2,2]"), sh(&p, "[2,1]"));
        assert_eq!(c.kind, SkewKind::RookStrip);
        assert_eq!(c.boxes.len(), 1);
    }

    #[test]
    fn weyl_roundtrip_and_lengths() {
        for kind in [
            SpaceKind::Grassmannian { k: 2, n: 4 },
            SpaceKind::Lagrangian { n: 3 },
            SpaceKind::QuadricOdd { dim: 7 },
            SpaceKind::QuadricEven { dim: 8 },
        ] {
            let p = build_poset(kind).unwrap();
            for s in enumerate_shapes(&p) {
                let w = to_weyl(&p, s);
                assert_eq!(p.root_system().length(&w), s.len());
                assert_eq!(from_weyl(&p, &w).unwrap(), s);
            }
        }
    }

    #[test]
    fn from_weyl_rejects_non_minimal_representatives() {
        let p = gr24();
        // A reflection inside W_P has inversions outside P_X.
        let rs = p.root_system();
        let s1 = rs.reflection(rs.simple_root_index(0));
        assert!(from_weyl(&p, &s1).is_err());
    }

    #[test]
    fn single_box_shape_is_gamma_reflection() {
        let p = gr24();
        let rs = p.root_system();
        let gamma = p.space().gamma_index();
        let s = sh(&p, "[1]");
        assert_eq!(to_weyl(&p, s), rs.reflection(rs.simple_root_index(gamma)));
    }

    #[test]
    fn duals_in_gr24() {
        let p = gr24();
        assert_eq!(dual(&p, Shape::EMPTY), p.full_shape());
        assert_eq!(dual(&p, p.full_shape()), Shape::EMPTY);
        assert_eq!(dual(&p, sh(&p, "[1]")), sh(&p, "[2,1]"));
        // Type A: the dual is the rotated complement.
        for s in enumerate_shapes(&p) {
            let d = dual(&p, s);
            assert_eq!(d.len(), p.dim() - s.len());
            assert_eq!(dual(&p, d), s);
        }
    }

    #[test]
    fn dual_is_an_involution_everywhere() {
        for kind in [
            SpaceKind::Lagrangian { n: 3 },
            SpaceKind::Orthogonal { n: 4 },
            SpaceKind::QuadricOdd { dim: 5 },
            SpaceKind::QuadricEven { dim: 6 },
            SpaceKind::CayleyPlane,
        ] {
            let p = build_poset(kind).unwrap();
            for s in enumerate_shapes(&p) {
                let d = dual(&p, s);
                assert_eq!(d.len(), p.dim() - s.len());
                assert_eq!(dual(&p, d), s, "{kind}");
            }
        }
    }

    #[test]
    fn box_mutation() {
        let p = gr24();
        let gamma_box = 0;
        assert_eq!(add_box(&p, Shape::EMPTY, gamma_box).unwrap(), sh(&p, "[1]"));
        // (2,1) + box (2,2) = (2,2).
        let b22 = p.box_at(2, 2).unwrap();
        assert_eq!(add_box(&p, sh(&p, "[2,1]"), b22).unwrap(), sh(&p, "[2,2]"));
        // Adding a non-minimal box to the empty shape is invalid.
        assert!(add_box(&p, Shape::EMPTY, b22).is_err());
        assert!(remove_box(&p, sh(&p, "[2,1]"), 0).is_err());
        assert_eq!(
            remove_box(&p, sh(&p, "[2,1]"), p.box_at(2, 1).unwrap()).unwrap(),
            sh(&p, "[2]")
        );
    }

    #[test]
    fn bruhat_order_is_containment_with_graded_lengths() {
        let p = lg4();
        let shapes = enumerate_shapes(&p);
        for &u in &shapes {
            for &w in &shapes {
                if u.leq(&w) {
                    assert_eq!(w.len() - u.len(), w.difference(&u).len());
                }
            }
        }
    }

    #[test]
    fn minuscule_short_rook_strips_are_trivial() {
        let p = build_poset(SpaceKind::Grassmannian { k: 3, n: 6 }).unwrap();
        let shapes = enumerate_shapes(&p);
        for &u in &shapes {
            for &w in &shapes {
                let c = classify_skew(&p, w, u);
                if c.kind.is_short_rook_strip() {
                    assert_eq!(u, w);
                }
            }
        }
    }

    #[test]
    fn quadric_literals() {
        let p = build_poset(SpaceKind::QuadricEven { dim: 10 }).unwrap();
        // The two middle ideals of the fork are distinguishable.
        let upper = sh(&p, "[5]");
        let lower = sh(&p, "[4,1]");
        assert_eq!(upper.len(), 5);
        assert_eq!(lower.len(), 5);
        assert!(upper != lower);
        assert_eq!(render_shape(&p, upper), "[5]");
        assert_eq!(render_shape(&p, lower), "[4,1]");
        let p = build_poset(SpaceKind::QuadricOdd { dim: 9 }).unwrap();
        assert_eq!(render_shape(&p, sh(&p, "[6]")), "[6]");
    }

    #[test]
    fn exceptional_literals_roundtrip() {
        let p = build_poset(SpaceKind::CayleyPlane).unwrap();
        for s in enumerate_shapes(&p) {
            let lit = render_shape(&p, s);
            assert_eq!(parse_shape(&p, &lit).unwrap(), s);
        }
    }

    #[test]
    fn grassmannian_permutation_one_line() {
        // to_weyl(shape (3,2)) in Gr(3,7) equals the Grassmannian permutation
        // 1462357 built from adjacent transpositions.
        let p = build_poset(SpaceKind::Grassmannian { k: 3, n: 7 }).unwrap();
        let rs = p.root_system();
        let shape = sh(&p, "[3,2]");
        // Reduced word for the one-line permutation by sorting descents.
        let mut perm = [1usize, 4, 6, 2, 3, 5, 7];
        let mut word: Vec<usize> = Vec::new();
        loop {
            match (0..perm.len() - 1).find(|&i| perm[i] > perm[i + 1]) {
                None => break,
                Some(i) => {
                    word.push(i);
                    perm.swap(i, i + 1);
                }
            }
        }
        // perm = w * s_{i_1} * ... * s_{i_m} sorted to the identity, so
        // w = s_{i_m} ... s_{i_1} reversed back.
        let mut w = WeylElement::identity(rs.rank);
        for &i in word.iter().rev() {
            w = w.compose(&rs.reflection(rs.simple_root_index(i)));
        }
        assert_eq!(to_weyl(&p, shape), w);
    }
}
