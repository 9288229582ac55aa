//! The cominuscule poset P_X of positive roots containing the cominuscule
//! root with coefficient one, realized on a grid of boxes.
//!
//! Each supported space carries a fixed planar layout in which the root
//! order coincides with the north-west order: box b' <= b iff
//! row(b') <= row(b) and col(b') <= col(b).  For the classical families the
//! root attached to each grid cell is written down explicitly; for the two
//! exceptional spaces the assignment is recovered by matching rank levels
//! of the abstract root order against the fixed grid, which is then
//! re-verified cell by cell.  The first-row/first-column data driving curve
//! neighborhoods (the shape z_1 and the translation applied by psi) is
//! tabulated per family.

use crate::error::{Error, Result};
use crate::roots::{Family, RootSystem, Weight, WeylElement};
use crate::shapes::Shape;
use std::collections::BTreeMap;
use std::fmt;

/// Which cominuscule flag variety a poset describes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpaceKind {
    /// Gr(k,n), type A.
    Grassmannian { k: usize, n: usize },
    /// LG(n,2n), type C.
    Lagrangian { n: usize },
    /// OG(n,2n), type D.
    Orthogonal { n: usize },
    /// Q^dim with dim odd, type B.
    QuadricOdd { dim: usize },
    /// Q^dim with dim even, type D.
    QuadricEven { dim: usize },
    /// The Cayley plane E6/P6.
    CayleyPlane,
    /// The Freudenthal variety E7/P7.
    Freudenthal,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SpaceKind::Grassmannian { k, n } => write!(f, "Gr({k},{n})"),
            SpaceKind::Lagrangian { n } => write!(f, "LG({n})"),
            SpaceKind::Orthogonal { n } => write!(f, "OG({n})"),
            SpaceKind::QuadricOdd { dim } | SpaceKind::QuadricEven { dim } => {
                write!(f, "Q({dim})")
            }
            SpaceKind::CayleyPlane => write!(f, "E6"),
            SpaceKind::Freudenthal => write!(f, "E7"),
        }
    }
}

impl SpaceKind {
    /// Parses the textual forms `Gr(k,n)`, `LG(n)`, `OG(n)`, `Q(n)`, `E6`, `E7`.
    /// `LG(n,2n)` and `OG(n,2n)` are accepted as synonyms.
    pub fn parse(text: &str) -> Result<SpaceKind> {
        let t = text.trim();
        let bad = || Error::Parse(format!("unrecognized space `{t}`"));
        if t.eq_ignore_ascii_case("E6") {
            return Ok(SpaceKind::CayleyPlane);
        }
        if t.eq_ignore_ascii_case("E7") {
            return Ok(SpaceKind::Freudenthal);
        }
        let open = t.find('(').ok_or_else(bad)?;
        if !t.ends_with(')') {
            return Err(bad());
        }
        let head = &t[..open];
        let args: Vec<usize> = t[open + 1..t.len() - 1]
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
            .collect::<Result<_>>()?;
        match (head, args.as_slice()) {
            ("Gr", [k, n]) if *k >= 1 && k < n => Ok(SpaceKind::Grassmannian { k: *k, n: *n }),
            ("LG", [n]) => Ok(SpaceKind::Lagrangian { n: *n }),
            ("LG", [n, m]) if *m == 2 * n => Ok(SpaceKind::Lagrangian { n: *n }),
            ("OG", [n]) => Ok(SpaceKind::Orthogonal { n: *n }),
            ("OG", [n, m]) if *m == 2 * n => Ok(SpaceKind::Orthogonal { n: *n }),
            ("Q", [dim]) => {
                if dim % 2 == 1 {
                    Ok(SpaceKind::QuadricOdd { dim: *dim })
                } else {
                    Ok(SpaceKind::QuadricEven { dim: *dim })
                }
            }
            _ => Err(bad()),
        }
    }

    pub fn dimension(&self) -> usize {
        match *self {
            SpaceKind::Grassmannian { k, n } => k * (n - k),
            SpaceKind::Lagrangian { n } => n * (n + 1) / 2,
            SpaceKind::Orthogonal { n } => n * (n - 1) / 2,
            SpaceKind::QuadricOdd { dim } | SpaceKind::QuadricEven { dim } => dim,
            SpaceKind::CayleyPlane => 16,
            SpaceKind::Freudenthal => 27,
        }
    }
}

/// A space together with its root system and cominuscule simple root.
#[derive(Debug, Clone)]
pub struct Space {
    pub kind: SpaceKind,
    rs: RootSystem,
    /// Zero-based index of the cominuscule simple root gamma.
    gamma: usize,
}

impl Space {
    pub fn new(kind: SpaceKind) -> Result<Space> {
        let cfg = |msg: String| Error::Config(msg);
        let (family, rank, gamma) = match kind {
            SpaceKind::Grassmannian { k, n } => {
                if n < 2 || k == 0 || k >= n {
                    return Err(cfg(format!("Gr({k},{n}) requires 1 <= k < n and n >= 2")));
                }
                (Family::A, n - 1, k - 1)
            }
            SpaceKind::Lagrangian { n } => {
                if n < 2 {
                    return Err(cfg(format!("LG({n}) requires n >= 2")));
                }
                (Family::C, n, n - 1)
            }
            SpaceKind::Orthogonal { n } => {
                if n < 3 {
                    return Err(cfg(format!("OG({n}) requires n >= 3")));
                }
                (Family::D, n, n - 1)
            }
            SpaceKind::QuadricOdd { dim } => {
                if dim < 3 || dim % 2 == 0 {
                    return Err(cfg(format!(
                        "odd quadric dimension {dim} must be odd and >= 3"
                    )));
                }
                (Family::B, dim.div_ceil(2), 0)
            }
            SpaceKind::QuadricEven { dim } => {
                if dim < 4 || dim % 2 == 1 {
                    return Err(cfg(format!(
                        "even quadric dimension {dim} must be even and >= 4"
                    )));
                }
                (Family::D, dim / 2 + 1, 0)
            }
            SpaceKind::CayleyPlane => (Family::E6, 6, 5),
            SpaceKind::Freudenthal => (Family::E7, 7, 6),
        };
        let rs = RootSystem::new(family, rank)?;
        // gamma must have coefficient one in the highest root.
        let highest = rs.positive_roots().last().expect("nonempty root system");
        assert_eq!(highest.simple[gamma], 1, "gamma is not cominuscule");
        Ok(Space { kind, rs, gamma })
    }

    pub fn parse(text: &str) -> Result<Space> {
        Space::new(SpaceKind::parse(text)?)
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// Zero-based simple index of gamma.
    pub fn gamma_index(&self) -> usize {
        self.gamma
    }

    pub fn omega_gamma(&self) -> Weight {
        Weight::fundamental(self.rs.rank, self.gamma)
    }

    /// Minuscule means the underlying root system is simply laced.
    pub fn is_minuscule(&self) -> bool {
        matches!(
            self.rs.family,
            Family::A | Family::D | Family::E6 | Family::E7
        )
    }
}

/// One box of P_X.
#[derive(Debug, Clone)]
pub struct BoxInfo {
    /// Index into the root system's positive-root enumeration.
    pub root_idx: usize,
    pub row: usize,
    pub col: usize,
    pub short: bool,
    /// Zero-based simple index of the label delta(alpha) = w_lambda . alpha.
    pub delta: usize,
}

/// How psi moves the boxes that survive deletion of I(z_1).
#[derive(Debug, Clone, Copy)]
pub enum ShiftRule {
    /// Translate every surviving box by (-dr, -dc).
    Translate { dr: usize, dc: usize },
    /// Quadrics: only the maximal box survives and it moves to the minimal box.
    ChainCollapse,
}

/// The poset P_X with grid layout, order matrix, labels and z_1.
#[derive(Debug, Clone)]
pub struct CominusculePoset {
    space: Space,
    boxes: Vec<BoxInfo>,
    /// Row-major |boxes| x |boxes| matrix of the root partial order.
    leq: Vec<bool>,
    z1: Shape,
    shift: ShiftRule,
    cell_index: BTreeMap<(usize, usize), usize>,
}

/// Grid cells of each family's layout, as (row, first column, last column).
fn grid_rows(kind: SpaceKind) -> Vec<(usize, usize, usize)> {
    match kind {
        SpaceKind::Grassmannian { k, n } => (1..=k).map(|r| (r, 1, n - k)).collect(),
        SpaceKind::Lagrangian { n } => (1..=n).map(|r| (r, r, n)).collect(),
        SpaceKind::Orthogonal { n } => (1..=n - 1).map(|r| (r, r, n - 1)).collect(),
        SpaceKind::QuadricOdd { dim } => vec![(1, 1, dim)],
        SpaceKind::QuadricEven { dim } => {
            let m = dim / 2;
            vec![(1, 1, m), (2, m - 1, 2 * m - 2)]
        }
        SpaceKind::CayleyPlane => vec![(1, 1, 5), (2, 3, 5), (3, 4, 6), (4, 4, 8)],
        SpaceKind::Freudenthal => vec![
            (1, 1, 6),
            (2, 4, 6),
            (3, 5, 7),
            (4, 5, 9),
            (5, 5, 9),
            (6, 8, 9),
            (7, 9, 9),
            (8, 9, 9),
            (9, 9, 9),
        ],
    }
}

fn grid_cells(kind: SpaceKind) -> Vec<(usize, usize)> {
    let mut cells = Vec::new();
    for (r, c0, c1) in grid_rows(kind) {
        for c in c0..=c1 {
            cells.push((r, c));
        }
    }
    cells
}

/// Simple-root coordinates (zero-based, value 1 or 2 on index ranges).
fn interval_coords(rank: usize, segments: &[(usize, usize, i64)]) -> Vec<i64> {
    let mut v = vec![0i64; rank];
    for &(lo, hi, val) in segments {
        // 1-based inclusive range; empty when lo > hi.
        for slot in v.iter_mut().take(hi.min(rank)).skip(lo.saturating_sub(1)) {
            *slot = val;
        }
    }
    v
}

/// Explicit root coordinates for each grid cell of the classical families.
fn classical_cell_root(kind: SpaceKind, rank: usize, r: usize, c: usize) -> Vec<i64> {
    match kind {
        SpaceKind::Grassmannian { k, .. } => interval_coords(rank, &[(k - r + 1, k + c - 1, 1)]),
        SpaceKind::Lagrangian { n } => {
            if r == c {
                // 2 e_{n+1-r}
                interval_coords(rank, &[(n + 1 - r, n - 1, 2), (n, n, 1)])
            } else {
                // e_{n+1-c} + e_{n+1-r}
                let (i, j) = (n + 1 - c, n + 1 - r);
                interval_coords(rank, &[(i, j - 1, 1), (j, n - 1, 2), (n, n, 1)])
            }
        }
        SpaceKind::Orthogonal { n } => {
            // e_{n-c} + e_{n+1-r}
            let (i, j) = (n - c, n + 1 - r);
            if j == n {
                interval_coords(rank, &[(i, n - 2, 1), (n, n, 1)])
            } else {
                interval_coords(rank, &[(i, j - 1, 1), (j, n - 2, 2), (n - 1, n, 1)])
            }
        }
        SpaceKind::QuadricOdd { dim } => {
            let m = (dim - 1) / 2;
            let t = c;
            if t <= m {
                interval_coords(rank, &[(1, t, 1)])
            } else if t == m + 1 {
                interval_coords(rank, &[(1, m + 1, 1)])
            } else {
                let j = 2 * m + 3 - t;
                interval_coords(rank, &[(1, j - 1, 1), (j, m + 1, 2)])
            }
        }
        SpaceKind::QuadricEven { dim } => {
            let m = dim / 2;
            if r == 1 {
                interval_coords(rank, &[(1, c, 1)])
            } else if c == m - 1 {
                // e_1 + e_{m+1}
                interval_coords(rank, &[(1, m - 1, 1), (m + 1, m + 1, 1)])
            } else {
                let j = 2 * m - c; // c = m-1+s, j = m+1-s
                interval_coords(rank, &[(1, j - 1, 1), (j, m - 1, 2), (m, m + 1, 1)])
            }
        }
        SpaceKind::CayleyPlane | SpaceKind::Freudenthal => {
            unreachable!("exceptional cells are assigned by level matching")
        }
    }
}

/// Matches the abstract root order of P_X onto the exceptional grid by rank
/// level, backtracking over the (at most three) boxes per level.
fn assign_exceptional(
    rs: &RootSystem,
    root_indices: &[usize],
    cells: &[(usize, usize)],
) -> Vec<(usize, usize)> {
    let heights: Vec<i64> = root_indices.iter().map(|&i| rs.root(i).height()).collect();
    let min_h = *heights.iter().min().unwrap();
    let mut by_level: BTreeMap<i64, Vec<usize>> = BTreeMap::new();
    for (pos, h) in heights.iter().enumerate() {
        by_level.entry(h - min_h + 1).or_default().push(pos);
    }
    let mut cells_by_level: BTreeMap<i64, Vec<(usize, usize)>> = BTreeMap::new();
    for &(r, c) in cells {
        cells_by_level
            .entry((r + c - 1) as i64)
            .or_default()
            .push((r, c));
    }
    assert_eq!(
        by_level.keys().collect::<Vec<_>>(),
        cells_by_level.keys().collect::<Vec<_>>(),
        "rank levels of the grid do not match the root order"
    );
    for (h, v) in &by_level {
        assert_eq!(v.len(), cells_by_level[h].len(), "level {h} size mismatch");
    }

    let levels: Vec<i64> = by_level.keys().copied().collect();
    let mut assigned: Vec<Option<(usize, usize)>> = vec![None; root_indices.len()];

    fn permutations(k: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..k).collect();
        fn heap(v: &mut Vec<usize>, k: usize, out: &mut Vec<Vec<usize>>) {
            if k <= 1 {
                out.push(v.clone());
                return;
            }
            for i in 0..k {
                heap(v, k - 1, out);
                if k.is_multiple_of(2) {
                    v.swap(i, k - 1);
                } else {
                    v.swap(0, k - 1);
                }
            }
        }
        heap(&mut idx, k, &mut out);
        out.sort();
        out
    }

    fn search(
        rs: &RootSystem,
        root_indices: &[usize],
        by_level: &BTreeMap<i64, Vec<usize>>,
        cells_by_level: &BTreeMap<i64, Vec<(usize, usize)>>,
        levels: &[i64],
        li: usize,
        assigned: &mut Vec<Option<(usize, usize)>>,
    ) -> bool {
        if li == levels.len() {
            return true;
        }
        let h = levels[li];
        let members = &by_level[&h];
        let slots = &cells_by_level[&h];
        'perm: for perm in permutations(members.len()) {
            for (mi, &pi) in perm.iter().enumerate() {
                let pos = members[mi];
                let cell = slots[pi];
                let a = &rs.root(root_indices[pos]).simple;
                // Compatibility with every box already placed at a lower level.
                for (other, slot) in assigned.iter().enumerate() {
                    if let Some((orow, ocol)) = slot {
                        let b = &rs.root(root_indices[other]).simple;
                        let order_ab = RootSystem::root_leq(b, a);
                        let grid_ab = *orow <= cell.0 && *ocol <= cell.1;
                        let order_ba = RootSystem::root_leq(a, b);
                        let grid_ba = cell.0 <= *orow && cell.1 <= *ocol;
                        if order_ab != grid_ab || order_ba != grid_ba {
                            // Undo this level and try the next permutation.
                            for &m in members.iter().take(mi + 1) {
                                assigned[m] = None;
                            }
                            continue 'perm;
                        }
                    }
                }
                assigned[pos] = Some(cell);
            }
            if search(
                rs,
                root_indices,
                by_level,
                cells_by_level,
                levels,
                li + 1,
                assigned,
            ) {
                return true;
            }
            for &m in members {
                assigned[m] = None;
            }
        }
        false
    }

    let ok = search(
        rs,
        root_indices,
        &by_level,
        &cells_by_level,
        &levels,
        0,
        &mut assigned,
    );
    assert!(
        ok,
        "no order isomorphism between the root slice and the grid"
    );
    assigned.into_iter().map(|c| c.unwrap()).collect()
}

fn z1_cells(kind: SpaceKind) -> Vec<(usize, usize)> {
    match kind {
        SpaceKind::Grassmannian { k, n } => {
            let mut cells: Vec<(usize, usize)> = (1..=n - k).map(|c| (1, c)).collect();
            cells.extend((2..=k).map(|r| (r, 1)));
            cells
        }
        SpaceKind::Lagrangian { n } => (1..=n).map(|c| (1, c)).collect(),
        SpaceKind::Orthogonal { n } => {
            let mut cells: Vec<(usize, usize)> = (1..=n - 1).map(|c| (1, c)).collect();
            cells.extend((2..=n - 1).map(|c| (2, c)));
            cells
        }
        // Quadrics: every box except the maximal one.
        SpaceKind::QuadricOdd { dim } => (1..=dim - 1).map(|c| (1, c)).collect(),
        SpaceKind::QuadricEven { dim } => {
            let m = dim / 2;
            let mut cells: Vec<(usize, usize)> = (1..=m).map(|c| (1, c)).collect();
            cells.extend((m - 1..=2 * m - 3).map(|c| (2, c)));
            cells
        }
        SpaceKind::CayleyPlane => grid_cells(kind)
            .into_iter()
            .filter(|&(r, _)| r <= 3)
            .collect(),
        SpaceKind::Freudenthal => grid_cells(kind)
            .into_iter()
            .filter(|&(r, _)| r <= 4)
            .collect(),
    }
}

fn shift_rule(kind: SpaceKind) -> ShiftRule {
    match kind {
        SpaceKind::Grassmannian { .. } | SpaceKind::Lagrangian { .. } => {
            ShiftRule::Translate { dr: 1, dc: 1 }
        }
        SpaceKind::Orthogonal { .. } => ShiftRule::Translate { dr: 2, dc: 2 },
        SpaceKind::QuadricOdd { .. } | SpaceKind::QuadricEven { .. } => ShiftRule::ChainCollapse,
        SpaceKind::CayleyPlane => ShiftRule::Translate { dr: 3, dc: 3 },
        SpaceKind::Freudenthal => ShiftRule::Translate { dr: 4, dc: 4 },
    }
}

impl CominusculePoset {
    /// Builds P_X for the space, with order, labels, z_1 and grid layout.
    pub fn build(space: Space) -> Result<CominusculePoset> {
        let kind = space.kind;
        let rs = &space.rs;
        let gamma = space.gamma;
        if space.kind.dimension() > 64 {
            return Err(Error::Config(format!(
                "dim {} exceeds the 64-box limit of the shape bitset",
                space.kind.dimension()
            )));
        }

        // The coefficient-one slice of the positive roots.
        let slice: Vec<usize> = (0..rs.positive_roots().len())
            .filter(|&i| rs.root(i).simple[gamma] == 1)
            .collect();
        assert_eq!(slice.len(), kind.dimension(), "|P_X| != dim X for {kind}");

        let cells = grid_cells(kind);
        assert_eq!(cells.len(), slice.len());

        // Attach a grid cell to every root of the slice.
        let placed: Vec<(usize, usize, usize)> = match kind {
            SpaceKind::CayleyPlane | SpaceKind::Freudenthal => {
                let cells_for = assign_exceptional(rs, &slice, &cells);
                slice
                    .iter()
                    .zip(cells_for)
                    .map(|(&ri, (r, c))| (ri, r, c))
                    .collect()
            }
            _ => cells
                .iter()
                .map(|&(r, c)| {
                    let coords = classical_cell_root(kind, rs.rank, r, c);
                    let ri = rs
                        .root_index(&coords)
                        .unwrap_or_else(|| panic!("cell ({r},{c}) of {kind}: not a root"));
                    assert_eq!(rs.root(ri).simple[gamma], 1, "cell root outside P_X");
                    (ri, r, c)
                })
                .collect(),
        };

        let mut boxes: Vec<(usize, usize, usize)> = placed;
        boxes.sort_by_key(|&(_, r, c)| (r, c));
        let n = boxes.len();

        // Order from root coordinates; the grid must agree with it.
        let mut leq = vec![false; n * n];
        for i in 0..n {
            for j in 0..n {
                let a = &rs.root(boxes[i].0).simple;
                let b = &rs.root(boxes[j].0).simple;
                let by_roots = RootSystem::root_leq(a, b);
                let by_grid = boxes[i].1 <= boxes[j].1 && boxes[i].2 <= boxes[j].2;
                assert_eq!(
                    by_roots, by_grid,
                    "grid order disagrees with root order in {kind} at boxes {i},{j}"
                );
                leq[i * n + j] = by_roots;
            }
        }

        // delta(alpha) = w_lambda . alpha with lambda the ideal of boxes below alpha.
        let mut infos = Vec::with_capacity(n);
        for i in 0..n {
            let mut w = WeylElement::identity(rs.rank);
            for j in 0..n {
                if j != i && leq[j * n + i] {
                    w = w.compose(&rs.reflection(boxes[j].0));
                }
            }
            let image = w.apply_root(&rs.root(boxes[i].0).simple);
            let di = rs
                .root_index(&image)
                .unwrap_or_else(|| panic!("delta label of box {i} is not a positive root"));
            let delta = rs.root(di).height();
            assert_eq!(delta, 1, "delta label of box {i} is not simple");
            let delta = image.iter().position(|&c| c == 1).unwrap();
            let short = rs.root(boxes[i].0).norm2 == 1;
            assert_eq!(
                short,
                rs.norm2_simple(delta) == 1,
                "delta label norm disagrees with the box norm"
            );
            infos.push(BoxInfo {
                root_idx: boxes[i].0,
                row: boxes[i].1,
                col: boxes[i].2,
                short,
                delta,
            });
        }
        assert!(space.is_minuscule() == infos.iter().all(|b| !b.short) || !space.is_minuscule());
        if space.is_minuscule() {
            assert!(
                infos.iter().all(|b| !b.short),
                "short box in a minuscule space"
            );
        }

        let cell_index: BTreeMap<(usize, usize), usize> = infos
            .iter()
            .enumerate()
            .map(|(i, b)| ((b.row, b.col), i))
            .collect();

        let mut z1_bits = 0u64;
        for cell in z1_cells(kind) {
            z1_bits |= 1 << cell_index[&cell];
        }
        let z1 = Shape::from_bits(z1_bits);

        let poset = CominusculePoset {
            space,
            boxes: infos,
            leq,
            z1,
            shift: shift_rule(kind),
            cell_index,
        };
        assert!(
            poset.is_ideal(poset.z1),
            "tabulated z_1 is not an order ideal"
        );
        assert_eq!(poset.boxes[0].row, 1);
        assert_eq!(poset.boxes[0].col, 1);
        assert_eq!(
            poset.boxes[0].root_idx,
            poset.space.rs.simple_root_index(gamma),
            "the minimal box must be gamma"
        );
        Ok(poset)
    }

    pub fn space(&self) -> &Space {
        &self.space
    }

    pub fn kind(&self) -> SpaceKind {
        self.space.kind
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.space.rs
    }

    pub fn dim(&self) -> usize {
        self.boxes.len()
    }

    pub fn boxes(&self) -> &[BoxInfo] {
        &self.boxes
    }

    /// Box order: index i below index j.
    pub fn leq_boxes(&self, i: usize, j: usize) -> bool {
        self.leq[i * self.boxes.len() + j]
    }

    pub fn box_at(&self, row: usize, col: usize) -> Option<usize> {
        self.cell_index.get(&(row, col)).copied()
    }

    pub fn z1(&self) -> Shape {
        self.z1
    }

    pub fn shift(&self) -> ShiftRule {
        self.shift
    }

    /// Whether a bitset over the boxes is downward closed.
    pub fn is_ideal(&self, s: Shape) -> bool {
        let n = self.boxes.len();
        for i in 0..n {
            if s.contains(i) {
                for j in 0..n {
                    if self.leq[j * n + i] && !s.contains(j) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// The full shape (all of P_X).
    pub fn full_shape(&self) -> Shape {
        Shape::from_bits(if self.boxes.len() == 64 {
            u64::MAX
        } else {
            (1u64 << self.boxes.len()) - 1
        })
    }

    /// Boxes addable to the ideal `s` (their lower set is already inside).
    /// Addable boxes are automatically pairwise incomparable.
    pub fn addable_boxes(&self, s: Shape) -> Vec<usize> {
        let n = self.boxes.len();
        (0..n)
            .filter(|&b| {
                !s.contains(b) && (0..n).all(|j| j == b || !self.leq[j * n + b] || s.contains(j))
            })
            .collect()
    }

    /// ASCII rendering of the poset: `#` for boxes of z_1, `.` for boxes on
    /// long roots when the space has short roots (the dotted boxes of the
    /// reference diagrams), `o` otherwise.
    pub fn render(&self) -> String {
        let max_row = self.boxes.iter().map(|b| b.row).max().unwrap_or(0);
        let max_col = self.boxes.iter().map(|b| b.col).max().unwrap_or(0);
        let minuscule = self.space.is_minuscule();
        let mut out = String::new();
        for r in 1..=max_row {
            let mut line = String::new();
            for c in 1..=max_col {
                let ch = match self.box_at(r, c) {
                    None => ' ',
                    Some(i) => {
                        if self.z1.contains(i) {
                            '#'
                        } else if !minuscule && !self.boxes[i].short {
                            '.'
                        } else {
                            'o'
                        }
                    }
                };
                line.push(ch);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }

    /// Renders a shape over the poset outline: `#` for boxes of the shape,
    /// `o` (or `.` on long boxes outside minuscule spaces) elsewhere.
    pub fn render_shape(&self, s: Shape) -> String {
        let max_row = self.boxes.iter().map(|b| b.row).max().unwrap_or(0);
        let max_col = self.boxes.iter().map(|b| b.col).max().unwrap_or(0);
        let minuscule = self.space.is_minuscule();
        let mut out = String::new();
        for r in 1..=max_row {
            let mut line = String::new();
            for c in 1..=max_col {
                let ch = match self.box_at(r, c) {
                    None => ' ',
                    Some(i) => {
                        if s.contains(i) {
                            '#'
                        } else if !minuscule && !self.boxes[i].short {
                            '.'
                        } else {
                            'o'
                        }
                    }
                };
                line.push(ch);
            }
            out.push_str(line.trim_end());
            out.push('\n');
        }
        out
    }
}

/// Convenience constructor: parse, validate and build in one step.
pub fn build_poset(kind: SpaceKind) -> Result<CominusculePoset> {
    CominusculePoset::build(Space::new(kind)?)
}
