//! Elementary moves: shifting one defect one unit left and the exact count
//! ratios this produces — the jump-set products in finite Aztec rectangles,
//! the likes/unlikes kernels, and the α-window move factors with their
//! boundary radical.

use crate::exact::{ExactError, ExactValue, GammaProduct};
use crate::lattice::{DefectConfig, DefectKind};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MoveError {
    #[error("defect index {0} out of bounds")]
    BadIndex(usize),
    #[error("move blocked: site {0} is occupied or off the board")]
    Blocked(i64),
    #[error("kernel arguments must be distinct")]
    CoincidentKernelPoints,
    #[error("clusters must have the same number of holes and separations")]
    MismatchedClusters,
    #[error("window position must satisfy |α| < 1")]
    BadWindowPosition,
    #[error(transparent)]
    Exact(#[from] ExactError),
}

/// Flattens the axis into its existing nodes: holes contribute nothing,
/// plain sites one node, separations two (the "doubled node" convention).
/// Returns node labels in increasing order.
fn flatten(config: &DefectConfig, from: i64, to: i64) -> Vec<i64> {
    let mut nodes = Vec::new();
    for v in from..=to {
        match config.defect_at(v) {
            Some(DefectKind::Hole) => {}
            Some(DefectKind::Separation) => {
                nodes.push(v);
                nodes.push(v);
            }
            None => nodes.push(v),
        }
    }
    nodes
}

/// Every second node of a flattened run (the 2nd, 4th, …), deduplicated to
/// labels: exactly the skip-one walk of the jump-set construction.
fn every_second(nodes: impl Iterator<Item = i64>) -> Vec<i64> {
    let mut out = Vec::new();
    for (idx, v) in nodes.enumerate() {
        if idx % 2 == 1 {
            out.push(v);
        }
    }
    out
}

/// Jump set `S_{n,i}` for moving the hole at `a_i` one unit left: walk right
/// from `a_i` and left from `a_i−1`, skipping one existing node each time,
/// separations counted as doubled nodes. `config` is the configuration with
/// the hole still at `a_i`.
pub fn hole_jump_set(config: &DefectConfig, hole_index: usize) -> Result<Vec<i64>, MoveError> {
    let a = *config.holes.get(hole_index).ok_or(MoveError::BadIndex(hole_index))?;
    if a <= 1 || config.defect_at(a - 1).is_some() {
        return Err(MoveError::Blocked(a - 1));
    }
    let w = config.width();
    let mut set = every_second(flatten(config, a + 1, w).into_iter());
    let left = flatten(config, 1, a - 2);
    set.extend(every_second(left.into_iter().rev()));
    set.sort_unstable();
    Ok(set)
}

/// Jump set `S'_{n,i}` for moving the separation at `b_i` one unit left.
/// The rightward walk starts from the leftmost node of the separation at
/// `b_i` (so its own twin is the first node skipped); the leftward walk runs
/// in the moved configuration, starting from the rightmost node of the
/// separation now at `b_i−1`.
pub fn sep_jump_set(config: &DefectConfig, sep_index: usize) -> Result<Vec<i64>, MoveError> {
    let b = *config.seps.get(sep_index).ok_or(MoveError::BadIndex(sep_index))?;
    if b <= 1 || config.defect_at(b - 1).is_some() {
        return Err(MoveError::Blocked(b - 1));
    }
    let w = config.width();
    // rightward, in `config`: twin of b first, then everything right of b
    let mut right_nodes = vec![b];
    right_nodes.extend(flatten(config, b + 1, w));
    let mut set = every_second(right_nodes.into_iter());
    // leftward, in the moved configuration: twin of b−1 first, then left of it
    let moved = moved_config(config, DefectKind::Separation, sep_index)?;
    let mut left_nodes = vec![b - 1];
    left_nodes.extend(flatten(&moved, 1, b - 2).into_iter().rev());
    set.extend(every_second(left_nodes.into_iter()));
    set.sort_unstable();
    Ok(set)
}

fn moved_config(
    config: &DefectConfig,
    kind: DefectKind,
    index: usize,
) -> Result<DefectConfig, MoveError> {
    let mut cfg = config.clone();
    let list = match kind {
        DefectKind::Hole => &mut cfg.holes,
        DefectKind::Separation => &mut cfg.seps,
    };
    let v = *list.get(index).ok_or(MoveError::BadIndex(index))?;
    list[index] = v - 1;
    list.sort_unstable();
    cfg.validate().map_err(|_| MoveError::Blocked(v - 1))?;
    Ok(cfg)
}

/// `M(config) / M(config with hole a_i moved to a_i−1)` as the jump-set
/// product `∏_{j∈S} |(a_i−1)−j| / |a_i−j|`.
pub fn move_hole_ratio(config: &DefectConfig, hole_index: usize) -> Result<ExactValue, MoveError> {
    let a = *config.holes.get(hole_index).ok_or(MoveError::BadIndex(hole_index))?;
    let set = hole_jump_set(config, hole_index)?;
    let mut r = BigRational::one();
    for j in set {
        r *= BigRational::new(BigInt::from((a - 1 - j).abs()), BigInt::from((a - j).abs()));
    }
    Ok(ExactValue::from_rational(r))
}

/// `M(config) / M(config with separation b_i moved to b_i−1)` as
/// `∏_{j∈S'} |b_i−j| / |(b_i−1)−j|` (reciprocal orientation vs holes).
pub fn move_sep_ratio(config: &DefectConfig, sep_index: usize) -> Result<ExactValue, MoveError> {
    let b = *config.seps.get(sep_index).ok_or(MoveError::BadIndex(sep_index))?;
    let set = sep_jump_set(config, sep_index)?;
    let mut r = BigRational::one();
    for j in set {
        r *= BigRational::new(BigInt::from((b - j).abs()), BigInt::from((b - 1 - j).abs()));
    }
    Ok(ExactValue::from_rational(r))
}

/// Changing the leftmost monomer into a separation: the double ratio
///
/// `[M(H,S)/M(H−δ₁,S)] / [M'(H∖a₁, S∪a₁)/M'(H∖a₁, S∖a₁+δ)]`
///
/// (primed counts on the rectangle two rows taller) equals
/// `|a₁−1−(2n+k−l)|/|a₁−1| · ∏_{j≥2}|a₁−a_j|/|a₁−1−a_j| · ∏_j|a₁−1−b_j|/|a₁−b_j|`,
/// with every factor taken positively so it matches ratios of counts.
pub fn hole_to_sep_ratio(config: &DefectConfig) -> Result<ExactValue, MoveError> {
    let a1 = *config.holes.first().ok_or(MoveError::BadIndex(0))?;
    if config.offsets_left_blocked(a1) {
        return Err(MoveError::Blocked(a1 - 1));
    }
    let w = config.width();
    let mut r = BigRational::new(BigInt::from((a1 - 1 - w).abs()), BigInt::from((a1 - 1).abs()));
    for &aj in &config.holes[1..] {
        r *= BigRational::new(BigInt::from((a1 - aj).abs()), BigInt::from((a1 - 1 - aj).abs()));
    }
    for &bj in &config.seps {
        r *= BigRational::new(BigInt::from((a1 - 1 - bj).abs()), BigInt::from((a1 - bj).abs()));
    }
    Ok(ExactValue::from_rational(r))
}

impl DefectConfig {
    /// True when `a1` is not a movable leftmost defect.
    fn offsets_left_blocked(&self, a1: i64) -> bool {
        a1 <= 1
            || self.defect_at(a1 - 1).is_some()
            || self.holes.iter().chain(self.seps.iter()).any(|&p| p < a1)
    }
}

/// Likes kernel `L_D(x,y)`: the Γ-ratio selected by the parity of
/// `|⟨x,y⟩ ∖ D|`, the number of non-defect sites strictly between.
pub fn likes_kernel(x: i64, y: i64, defects: &[i64]) -> Result<ExactValue, MoveError> {
    kernel(x, y, defects, false)
}

/// Unlikes kernel `U_D(x,y)`: the opposite-parity branch of the likes kernel.
pub fn unlikes_kernel(x: i64, y: i64, defects: &[i64]) -> Result<ExactValue, MoveError> {
    kernel(x, y, defects, true)
}

fn kernel(x: i64, y: i64, defects: &[i64], unlike: bool) -> Result<ExactValue, MoveError> {
    if x == y {
        return Err(MoveError::CoincidentKernelPoints);
    }
    let (lo, hi) = (x.min(y), x.max(y));
    let between = ((lo + 1)..hi).filter(|v| !defects.contains(v)).count();
    let odd_branch = (between % 2 == 1) ^ unlike;
    let d = hi - lo; // |x−y|, in half units below: d = |x−y| so halves are d, d±1
    let g = if odd_branch {
        // Γ(|x−y|/2)Γ(|x−y|/2+1) / Γ²((|x−y|+1)/2)
        GammaProduct::new()
            .times_half(d)
            .times_half(d + 2)
            .over_half(d + 1)
            .over_half(d + 1)
    } else {
        // Γ((|x−y|−1)/2)Γ((|x−y|+1)/2) / Γ²(|x−y|/2)
        GammaProduct::new()
            .times_half(d - 1)
            .times_half(d + 1)
            .over_half(d)
            .over_half(d)
    };
    Ok(g.eval()?)
}

/// A defect system in an α-window: hole and separation positions on ℤ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowCluster {
    pub holes: Vec<i64>,
    pub seps: Vec<i64>,
}

impl WindowCluster {
    pub fn new(mut holes: Vec<i64>, mut seps: Vec<i64>) -> Self {
        holes.sort_unstable();
        seps.sort_unstable();
        WindowCluster { holes, seps }
    }

    fn all_positions(&self) -> Vec<i64> {
        let mut v: Vec<i64> = self.holes.iter().chain(self.seps.iter()).copied().collect();
        v.sort_unstable();
        v
    }

    fn occupied(&self, p: i64) -> bool {
        self.holes.contains(&p) || self.seps.contains(&p)
    }

    pub fn charge(&self) -> i64 {
        self.holes.len() as i64 - self.seps.len() as i64
    }

    pub fn translate(&self, d: i64) -> Self {
        WindowCluster {
            holes: self.holes.iter().map(|&h| h + d).collect(),
            seps: self.seps.iter().map(|&s| s + d).collect(),
        }
    }
}

/// One elementary move in an α-window: the ratio
/// `ω̃_α(system) / ω̃_α(system with the chosen defect moved one unit left)`.
///
/// Holes contribute `√((1−α)/(1+α))`, separations the reciprocal radical,
/// times likes/unlikes kernel products against the other defects.
pub fn alpha_move_ratio(
    alpha: &BigRational,
    cluster: &WindowCluster,
    index: usize,
    kind: DefectKind,
) -> Result<ExactValue, MoveError> {
    if alpha.abs() >= BigRational::one() {
        return Err(MoveError::BadWindowPosition);
    }
    let moving = match kind {
        DefectKind::Hole => *cluster.holes.get(index).ok_or(MoveError::BadIndex(index))?,
        DefectKind::Separation => *cluster.seps.get(index).ok_or(MoveError::BadIndex(index))?,
    };
    if cluster.occupied(moving - 1) {
        return Err(MoveError::Blocked(moving - 1));
    }

    let one = BigRational::one();
    let radical_base = match kind {
        DefectKind::Hole => (&one - alpha) / (&one + alpha),
        DefectKind::Separation => (&one + alpha) / (&one - alpha),
    };
    let mut v = ExactValue::rational_half_power(&radical_base, 1);

    let d_before = cluster.all_positions();
    let mut moved = cluster.clone();
    match kind {
        DefectKind::Hole => {
            moved.holes[index] = moving - 1;
            moved.holes.sort_unstable();
        }
        DefectKind::Separation => {
            moved.seps[index] = moving - 1;
            moved.seps.sort_unstable();
        }
    }
    let d_after = moved.all_positions();

    // like positions are those of the moving defect's own kind
    let (likes, unlikes) = match kind {
        DefectKind::Hole => (&cluster.holes, &cluster.seps),
        DefectKind::Separation => (&cluster.seps, &cluster.holes),
    };
    for &p in likes.iter() {
        if p < moving {
            v = v.mul(&likes_kernel(moving, p, &d_before)?);
        } else if p > moving {
            v = v.div(&likes_kernel(moving - 1, p, &d_after)?);
        }
    }
    for &p in unlikes.iter() {
        if p < moving {
            v = v.mul(&unlikes_kernel(moving, p, &d_before)?);
        } else if p > moving {
            v = v.div(&unlikes_kernel(moving - 1, p, &d_after)?);
        }
    }
    Ok(v)
}

/// Ratio `ω̃_α(to) / ω̃_α(from)` for two clusters with the same defect
/// counts, chained through elementary moves. The path stages every defect
/// far to the right of both clusters, then walks each down to its target,
/// so no intermediate move is ever blocked; the result is path-independent.
pub fn alpha_corr_ratio(
    alpha: &BigRational,
    from: &WindowCluster,
    to: &WindowCluster,
) -> Result<ExactValue, MoveError> {
    if from.holes.len() != to.holes.len() || from.seps.len() != to.seps.len() {
        return Err(MoveError::MismatchedClusters);
    }
    if from == to {
        return Ok(ExactValue::one());
    }
    let span = from
        .all_positions()
        .iter()
        .chain(to.all_positions().iter())
        .copied()
        .fold((i64::MAX, i64::MIN), |(lo, hi), p| (lo.min(p), hi.max(p)));
    let count = (from.holes.len() + from.seps.len()) as i64;
    // staging area strictly right of everything, defects two apart
    let stage_base = span.1 + 2;
    let stage = |i: i64| stage_base + 2 * i;

    // ω̃(to)/ω̃(from) = [ω̃(stage)/ω̃(from)]⁻¹ · [ω̃(stage)/ω̃(to)] … assembled
    // from leftward chains stage → from and stage → to.
    let chain_down = |target: &WindowCluster| -> Result<ExactValue, MoveError> {
        // slot i (ascending goal order) is served by stage slot i; within a
        // kind, relative order is preserved, so the leftmost still-staged
        // defect of the slot's kind is always the one to move
        let mut positions: Vec<(i64, DefectKind)> = target
            .holes
            .iter()
            .map(|&p| (p, DefectKind::Hole))
            .chain(target.seps.iter().map(|&p| (p, DefectKind::Separation)))
            .collect();
        positions.sort_unstable();
        let staged: Vec<(i64, DefectKind)> =
            (0..count).map(|i| (stage(i), positions[i as usize].1)).collect();
        let mut current = WindowCluster::new(
            staged.iter().filter(|(_, k)| *k == DefectKind::Hole).map(|&(p, _)| p).collect(),
            staged
                .iter()
                .filter(|(_, k)| *k == DefectKind::Separation)
                .map(|&(p, _)| p)
                .collect(),
        );
        let mut ratio = ExactValue::one(); // accumulates ω̃(stage)/ω̃(current)
        for &(goal, kind) in &positions {
            let list = match kind {
                DefectKind::Hole => &current.holes,
                DefectKind::Separation => &current.seps,
            };
            let mut pos = *list
                .iter()
                .find(|&&p| p >= stage_base)
                .ok_or(MoveError::MismatchedClusters)?;
            while pos > goal {
                let idx = match kind {
                    DefectKind::Hole => &current.holes,
                    DefectKind::Separation => &current.seps,
                }
                .iter()
                .position(|&p| p == pos)
                .expect("moving defect is tracked");
                let step = alpha_move_ratio(alpha, &current, idx, kind)?;
                ratio = ratio.mul(&step);
                match kind {
                    DefectKind::Hole => current.holes[idx] = pos - 1,
                    DefectKind::Separation => current.seps[idx] = pos - 1,
                }
                pos -= 1;
            }
        }
        current.holes.sort_unstable();
        current.seps.sort_unstable();
        debug_assert_eq!(&current, target);
        Ok(ratio)
    };

    let stage_over_from = chain_down(from)?;
    let stage_over_to = chain_down(to)?;
    Ok(stage_over_from.div(&stage_over_to))
}
