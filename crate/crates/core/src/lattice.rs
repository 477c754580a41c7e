//! Aztec rectangles and diamonds with defects on the symmetry axis.
//!
//! `AR_{m,w}` is the graph on the white squares of a `(2m+1)×(2w+1)`
//! chessboard with black corners, edges joining diagonally adjacent squares.
//! We always use height `m = 2n`, width `w = 2n+k−l` for `k` holes and `l`
//! separations on the horizontal symmetry axis, whose vertices are labelled
//! `1..=w` left to right.

use serde::{Deserialize, Serialize};

/// Errors from defect-configuration and graph construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LatticeError {
    #[error("axis label {0} out of range 1..={1}")]
    LabelOutOfRange(i64, i64),
    #[error("hole and separation labels overlap at {0}")]
    OverlappingDefects(i64),
    #[error("labels must be strictly increasing: {0:?}")]
    NotStrictlyIncreasing(Vec<i64>),
    #[error("half-size n must be positive")]
    NonPositiveSize,
}

/// Kind of a point defect on the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub enum DefectKind {
    Hole,
    Separation,
}

/// A defect configuration on `AR_{2n,2n+k−l}`: half-height `n`, hole labels
/// `holes`, separation labels `seps`, all on the axis `1..=2n+k−l`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DefectConfig {
    pub n: u32,
    #[serde(default)]
    pub holes: Vec<i64>,
    #[serde(default)]
    pub seps: Vec<i64>,
}

impl DefectConfig {
    pub fn new(n: u32, holes: Vec<i64>, seps: Vec<i64>) -> Result<Self, LatticeError> {
        let cfg = DefectConfig { n, holes, seps };
        cfg.validate()?;
        Ok(cfg)
    }

    /// The Aztec diamond `AD_{2n}` itself.
    pub fn diamond(n: u32) -> Self {
        DefectConfig { n, holes: Vec::new(), seps: Vec::new() }
    }

    pub fn validate(&self) -> Result<(), LatticeError> {
        if self.n == 0 {
            return Err(LatticeError::NonPositiveSize);
        }
        for list in [&self.holes, &self.seps] {
            if list.windows(2).any(|w| w[0] >= w[1]) {
                return Err(LatticeError::NotStrictlyIncreasing(list.clone()));
            }
        }
        let w = self.width();
        if w < 1 {
            return Err(LatticeError::NonPositiveSize);
        }
        for &v in self.holes.iter().chain(self.seps.iter()) {
            if v < 1 || v > w {
                return Err(LatticeError::LabelOutOfRange(v, w));
            }
        }
        if let Some(&v) = self.holes.iter().find(|v| self.seps.binary_search(v).is_ok()) {
            return Err(LatticeError::OverlappingDefects(v));
        }
        Ok(())
    }

    /// Number of holes `k`.
    pub fn k(&self) -> usize {
        self.holes.len()
    }

    /// Number of separations `l`.
    pub fn l(&self) -> usize {
        self.seps.len()
    }

    /// Axis width `2n + k − l`.
    pub fn width(&self) -> i64 {
        2 * self.n as i64 + self.k() as i64 - self.l() as i64
    }

    /// The defect at axis label `v`, if any.
    pub fn defect_at(&self, v: i64) -> Option<DefectKind> {
        if self.holes.binary_search(&v).is_ok() {
            Some(DefectKind::Hole)
        } else if self.seps.binary_search(&v).is_ok() {
            Some(DefectKind::Separation)
        } else {
            None
        }
    }

    /// 180° rotation: labels map to `width+1 − label`, kinds preserved. The
    /// matching count is invariant under this map.
    pub fn rotate_180(&self) -> Self {
        let w = self.width();
        let flip = |list: &[i64]| {
            let mut out: Vec<i64> = list.iter().map(|v| w + 1 - v).collect();
            out.sort_unstable();
            out
        };
        DefectConfig { n: self.n, holes: flip(&self.holes), seps: flip(&self.seps) }
    }
}

/// Kind of a dipole: monomer-first (`∘×`) or separation-first (`×∘`), odd or
/// even by the parity of the hole's axis position.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DipoleKind {
    /// Hole at `2s+1`, separation at `2s+2`.
    OddHoleSep,
    /// Hole at `2s`, separation at `2s+1` (needs `s ≥ 1`).
    EvenHoleSep,
    /// Separation at `2s+1`, hole at `2s+2`.
    EvenSepHole,
    /// Separation at `2s`, hole at `2s+1` (needs `s ≥ 1`).
    OddSepHole,
}

/// A dipole: two adjacent defects of opposite kind on the axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Dipole {
    pub kind: DipoleKind,
    /// The position parameter `s` of the four case formulas.
    pub s: i64,
}

impl Dipole {
    pub fn new(kind: DipoleKind, s: i64) -> Self {
        Dipole { kind, s }
    }

    /// Axis position of the hole.
    pub fn hole_pos(&self) -> i64 {
        match self.kind {
            DipoleKind::OddHoleSep => 2 * self.s + 1,
            DipoleKind::EvenHoleSep => 2 * self.s,
            DipoleKind::EvenSepHole => 2 * self.s + 2,
            DipoleKind::OddSepHole => 2 * self.s + 1,
        }
    }

    /// Axis position of the separation.
    pub fn sep_pos(&self) -> i64 {
        match self.kind {
            DipoleKind::OddHoleSep => 2 * self.s + 2,
            DipoleKind::EvenHoleSep => 2 * self.s + 1,
            DipoleKind::EvenSepHole => 2 * self.s + 1,
            DipoleKind::OddSepHole => 2 * self.s,
        }
    }

    /// True for odd dipoles (hole at an odd axis position).
    pub fn is_odd(&self) -> bool {
        matches!(self.kind, DipoleKind::OddHoleSep | DipoleKind::OddSepHole)
    }

    /// Sign ε: +1 when the hole is on the left.
    pub fn epsilon(&self) -> i64 {
        match self.kind {
            DipoleKind::OddHoleSep | DipoleKind::EvenHoleSep => 1,
            DipoleKind::EvenSepHole | DipoleKind::OddSepHole => -1,
        }
    }

    /// Leftmost and rightmost occupied positions.
    pub fn span(&self) -> (i64, i64) {
        let (h, s) = (self.hole_pos(), self.sep_pos());
        (h.min(s), h.max(s))
    }

    /// Both positions lie inside `[1, 2n]`.
    pub fn fits(&self, n: u32) -> bool {
        let (a, b) = self.span();
        a >= 1 && b <= 2 * n as i64
    }

    /// The dipole translated by `m` units (must keep `m` even to preserve
    /// parity; the caller is responsible for that).
    pub fn translate(&self, m: i64) -> Self {
        debug_assert!(m % 2 == 0, "dipole translation must be even to preserve parity");
        Dipole { kind: self.kind, s: self.s + m / 2 }
    }

    /// Classify two adjacent axis positions of opposite defect kinds as a
    /// dipole. `first_kind` is the kind at `pos`; the partner sits at `pos+1`.
    pub fn from_adjacent_pair(pos: i64, first_kind: DefectKind) -> Self {
        match (first_kind, pos % 2 != 0) {
            (DefectKind::Hole, true) => Dipole::new(DipoleKind::OddHoleSep, (pos - 1) / 2),
            (DefectKind::Hole, false) => Dipole::new(DipoleKind::EvenHoleSep, pos / 2),
            (DefectKind::Separation, true) => Dipole::new(DipoleKind::EvenSepHole, (pos - 1) / 2),
            (DefectKind::Separation, false) => Dipole::new(DipoleKind::OddSepHole, pos / 2),
        }
    }
}

/// An arbitrary finite defect cluster given by strictly increasing offsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DefectCluster {
    offsets: Vec<(i64, DefectKind)>,
    charge: i64,
}

impl DefectCluster {
    pub fn new(mut offsets: Vec<(i64, DefectKind)>) -> Result<Self, LatticeError> {
        offsets.sort_by_key(|&(o, _)| o);
        if offsets.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(LatticeError::NotStrictlyIncreasing(
                offsets.iter().map(|&(o, _)| o).collect(),
            ));
        }
        let charge = offsets
            .iter()
            .map(|&(_, k)| match k {
                DefectKind::Hole => 1,
                DefectKind::Separation => -1,
            })
            .sum();
        Ok(DefectCluster { offsets, charge })
    }

    pub fn offsets(&self) -> &[(i64, DefectKind)] {
        &self.offsets
    }

    /// Charge `q = #holes − #separations`.
    pub fn charge(&self) -> i64 {
        self.charge
    }

    pub fn holes(&self) -> Vec<i64> {
        self.offsets
            .iter()
            .filter(|&&(_, k)| k == DefectKind::Hole)
            .map(|&(o, _)| o)
            .collect()
    }

    pub fn seps(&self) -> Vec<i64> {
        self.offsets
            .iter()
            .filter(|&&(_, k)| k == DefectKind::Separation)
            .map(|&(o, _)| o)
            .collect()
    }

    /// The cluster translated `d` units to the right.
    pub fn translate(&self, d: i64) -> Self {
        DefectCluster {
            offsets: self.offsets.iter().map(|&(o, k)| (o + d, k)).collect(),
            charge: self.charge,
        }
    }
}

/// Vertex of an [`AxisGraph`]: board coordinates plus a tag for the two
/// copies created by a separation split.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Vertex {
    /// Board row (0 at the top, `4n` at the bottom; the axis is row `2n`).
    pub row: i64,
    /// Board column (0..=2w).
    pub col: i64,
    /// Separation-split tag.
    pub tag: VertexTag,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum VertexTag {
    Plain,
    /// Upper copy of a split axis vertex (keeps only the two upward edges).
    Up,
    /// Lower copy of a split axis vertex.
    Down,
}

/// The explicit bipartite graph of an Aztec rectangle with axis defects,
/// organized column by column for the profile-DP oracle.
#[derive(Debug, Clone)]
pub struct AxisGraph {
    /// Vertices grouped by board column; ids are (column, index-in-column).
    pub columns: Vec<Vec<Vertex>>,
    /// Adjacency: for vertex `(c, i)`, the indices in column `c+1` it touches.
    pub forward: Vec<Vec<Vec<usize>>>,
    /// Color class sizes (row parity).
    pub class_sizes: (usize, usize),
    /// Map axis label -> vertices carrying it (one, or two for separations).
    pub axis_vertices: Vec<(i64, Vec<(usize, usize)>)>,
}

impl AxisGraph {
    pub fn vertex_count(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn is_balanced(&self) -> bool {
        self.class_sizes.0 == self.class_sizes.1
    }
}

/// Builds the graph `AR_{2n,2n+k−l}(H,S)`: white squares of the chessboard,
/// diagonal adjacency, hole vertices deleted, separation vertices split into
/// an upper and a lower copy.
pub fn build_graph(config: &DefectConfig) -> Result<AxisGraph, LatticeError> {
    config.validate()?;
    let m = 2 * config.n as i64; // board half-height; axis row
    let w = config.width();
    let n_cols = 2 * w + 1;

    let mut columns: Vec<Vec<Vertex>> = Vec::with_capacity(n_cols as usize);
    let mut axis_vertices: Vec<(i64, Vec<(usize, usize)>)> = Vec::new();
    let mut even_class = 0usize;
    let mut odd_class = 0usize;

    for col in 0..n_cols {
        let mut column = Vec::new();
        for row in 0..=2 * m {
            if (row + col) % 2 == 0 {
                continue; // black square
            }
            if row == m {
                // axis vertex with label (col+1)/2
                let label = (col + 1) / 2;
                match config.defect_at(label) {
                    Some(DefectKind::Hole) => continue,
                    Some(DefectKind::Separation) => {
                        column.push(Vertex { row, col, tag: VertexTag::Up });
                        column.push(Vertex { row, col, tag: VertexTag::Down });
                        even_class += 2;
                        continue;
                    }
                    None => {}
                }
            }
            column.push(Vertex { row, col, tag: VertexTag::Plain });
            if row % 2 == 0 {
                even_class += 1;
            } else {
                odd_class += 1;
            }
        }
        columns.push(column);
    }

    for label in 1..=w {
        if config.defect_at(label) == Some(DefectKind::Hole) {
            continue;
        }
        let col = 2 * label - 1;
        let ids: Vec<(usize, usize)> = columns[col as usize]
            .iter()
            .enumerate()
            .filter(|(_, v)| v.row == m)
            .map(|(i, _)| (col as usize, i))
            .collect();
        axis_vertices.push((label, ids));
    }

    // Diagonal adjacency, respecting the separation split: the Up copy keeps
    // only its two upward neighbors, the Down copy the two downward ones.
    let mut forward: Vec<Vec<Vec<usize>>> = Vec::with_capacity(columns.len());
    for c in 0..columns.len() {
        let mut per_vertex = Vec::with_capacity(columns[c].len());
        for v in &columns[c] {
            let mut adj = Vec::new();
            if c + 1 < columns.len() {
                for (j, u) in columns[c + 1].iter().enumerate() {
                    if (u.row - v.row).abs() != 1 {
                        continue;
                    }
                    let v_ok = match v.tag {
                        VertexTag::Plain => true,
                        VertexTag::Up => u.row == v.row - 1,
                        VertexTag::Down => u.row == v.row + 1,
                    };
                    let u_ok = match u.tag {
                        VertexTag::Plain => true,
                        VertexTag::Up => v.row == u.row - 1,
                        VertexTag::Down => v.row == u.row + 1,
                    };
                    if v_ok && u_ok {
                        adj.push(j);
                    }
                }
            }
            per_vertex.push(adj);
        }
        forward.push(per_vertex);
    }

    Ok(AxisGraph { columns, forward, class_sizes: (even_class, odd_class), axis_vertices })
}
