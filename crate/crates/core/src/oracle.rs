//! Brute-force ground truth: exhaustive optimal bisection and the sweep
//! over zero-vertex assignments.

use alloc::vec::Vec;
use core::fmt;

use crate::bisect::{self, BisectError, SignPartition};
use crate::family::{self, FamilyError, FamilySpec};
use crate::graph::{Graph, GraphError, VertexSet};

/// Largest order accepted for exhaustive enumeration; C(28, 14) ≈ 4·10⁷.
pub const ENUMERATION_CAP: usize = 28;

/// Largest zero set accepted for the assignment sweep.
pub const ZERO_SWEEP_CAP: usize = 20;

#[derive(Debug, Clone, PartialEq)]
pub enum OracleError {
    /// Order outside `[2, 28]`; callers must fall back to witness bounds.
    OrderOutOfRange { n: usize },
    /// More zero vertices than the sweep cap allows.
    ZeroSetTooLarge { size: usize },
    /// No assignment of zero vertices reaches the target side size.
    Unbalanceable { plus: usize, zero: usize, target: usize },
    Graph(GraphError),
    Bisect(BisectError),
    Family(FamilyError),
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::OrderOutOfRange { n } => {
                write!(f, "order {n} outside the enumeration range [2, {ENUMERATION_CAP}]")
            }
            OracleError::ZeroSetTooLarge { size } => {
                write!(f, "zero set of size {size} exceeds the sweep cap {ZERO_SWEEP_CAP}")
            }
            OracleError::Unbalanceable { plus, zero, target } => write!(
                f,
                "|i+| = {plus} with {zero} zero vertices cannot reach side size {target}"
            ),
            OracleError::Graph(e) => write!(f, "{e}"),
            OracleError::Bisect(e) => write!(f, "{e}"),
            OracleError::Family(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for OracleError {}

impl From<GraphError> for OracleError {
    fn from(e: GraphError) -> Self {
        OracleError::Graph(e)
    }
}

impl From<BisectError> for OracleError {
    fn from(e: BisectError) -> Self {
        OracleError::Bisect(e)
    }
}

impl From<FamilyError> for OracleError {
    fn from(e: FamilyError) -> Self {
        OracleError::Family(e)
    }
}

/// Result of the exhaustive bisection search.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleResult {
    best_cut: u64,
    best_set: VertexSet,
    enumerated: u64,
}

impl OracleResult {
    pub fn best_cut(&self) -> u64 {
        self.best_cut
    }

    pub fn best_set(&self) -> &VertexSet {
        &self.best_set
    }

    pub fn enumerated(&self) -> u64 {
        self.enumerated
    }
}

/// Exact minimum cut over all ⌊n/2⌋-subsets, by bitmask enumeration in
/// ascending (colexicographic) order; ties keep the least bitmask.
pub fn optimal_bisection(g: &Graph) -> Result<OracleResult, OracleError> {
    let n = g.n();
    if !(2..=ENUMERATION_CAP).contains(&n) {
        return Err(OracleError::OrderOutOfRange { n });
    }
    let mut adj = [0u32; ENUMERATION_CAP];
    for &(a, b) in g.edges() {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let k = n / 2;
    let limit: u32 = 1 << n;
    let mut mask: u32 = (1 << k) - 1;
    let mut best_cut = u64::MAX;
    let mut best_mask = 0u32;
    let mut enumerated = 0u64;
    while mask < limit {
        let mut cut = 0u64;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            cut += (adj[v] & !mask).count_ones() as u64;
        }
        if cut < best_cut {
            best_cut = cut;
            best_mask = mask;
        }
        enumerated += 1;
        // Gosper's hack: next bitmask with the same popcount.
        let c = mask & mask.wrapping_neg();
        let r = mask + c;
        if r >= limit || c == 0 {
            break;
        }
        mask = r | (((mask ^ r) / c) >> 2);
    }
    let members = (0..n).filter(|&v| best_mask & (1 << v) != 0);
    let best_set = VertexSet::new(n, members).expect("mask bits in range");
    Ok(OracleResult { best_cut, best_set, enumerated })
}

/// Min and max cut over every assignment of the zero vertices that brings
/// the positive side up to ⌊n/2⌋.
pub fn zero_assignment_sweep(
    g: &Graph,
    p: &SignPartition,
) -> Result<(u64, u64), OracleError> {
    let n = g.n();
    let zeros = p.zero().members();
    let z = zeros.len();
    if z > ZERO_SWEEP_CAP {
        return Err(OracleError::ZeroSetTooLarge { size: z });
    }
    let target = n / 2;
    let plus = p.plus().len();
    if plus > target || plus + z < target {
        return Err(OracleError::Unbalanceable { plus, zero: z, target });
    }
    let need = target - plus;

    let mut min_cut = u64::MAX;
    let mut max_cut = 0u64;
    let mut eval = |subset: u32| -> Result<(), OracleError> {
        let extra = zeros
            .iter()
            .enumerate()
            .filter(|(i, _)| subset & (1 << i) != 0)
            .map(|(_, &v)| v);
        let members: Vec<usize> = p.plus().members().iter().copied().chain(extra).collect();
        let side = VertexSet::new(n, members)?;
        let cut = g.cut_cost(&side)?;
        min_cut = min_cut.min(cut);
        max_cut = max_cut.max(cut);
        Ok(())
    };

    if need == 0 {
        eval(0)?;
    } else {
        let limit: u32 = 1 << z;
        let mut mask: u32 = (1 << need) - 1;
        while mask < limit {
            eval(mask)?;
            let c = mask & mask.wrapping_neg();
            let r = mask + c;
            if r >= limit || c == 0 {
                break;
            }
            mask = r | (((mask ^ r) / c) >> 2);
        }
    }
    Ok((min_cut, max_cut))
}

/// Cut of the bisection induced by the block vector `(1, -1, -1, 1)ᵀ ⊗ 1`
/// padded with zeros at the cone vertices; the explicit upper-bound
/// witness for the family's optimal bisection.
pub fn witness_cut(spec: &FamilySpec) -> Result<u64, OracleError> {
    let (g, _) = family::build_family(spec)?;
    let m = spec.m();
    let ones = alloc::vec![1.0; m];
    let mut v = family::tensor(&[1.0, -1.0, -1.0, 1.0], &ones);
    v.resize(spec.order(), 0.0);
    let b = bisect::spectral_bisection(&g, &v)?;
    Ok(b.cut())
}
