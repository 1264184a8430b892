//! Median cuts, sign partitions, and spectral bisection.

use alloc::vec::Vec;
use core::fmt;

use crate::graph::{CutVector, Graph, GraphError, VertexSet};

#[derive(Debug, Clone, PartialEq)]
pub enum BisectError {
    EmptyVector,
    DimensionMismatch { expected: usize, got: usize },
    /// The sign structure around the median cannot yield a ⌊n/2⌋ side.
    CannotBalance { plus: usize, minus: usize, zero: usize },
    /// The supplied vector is not an eigenvector within tolerance.
    NotAnEigenpair { residual: f64 },
    Graph(GraphError),
}

impl fmt::Display for BisectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BisectError::EmptyVector => write!(f, "vector must be nonempty"),
            BisectError::DimensionMismatch { expected, got } => {
                write!(f, "expected length {expected}, got {got}")
            }
            BisectError::CannotBalance { plus, minus, zero } => write!(
                f,
                "median shift left |i+|={plus}, |i-|={minus}, |i0|={zero}: no balanced assignment"
            ),
            BisectError::NotAnEigenpair { residual } => {
                write!(f, "vector is not an eigenpair (residual {residual:e})")
            }
            BisectError::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for BisectError {}

impl From<GraphError> for BisectError {
    fn from(e: GraphError) -> Self {
        BisectError::Graph(e)
    }
}

/// Index sets of positive, negative, and (numerically) zero entries.
#[derive(Debug, Clone, PartialEq)]
pub struct SignPartition {
    plus: VertexSet,
    minus: VertexSet,
    zero: VertexSet,
    source: Vec<f64>,
}

impl SignPartition {
    pub fn plus(&self) -> &VertexSet {
        &self.plus
    }

    pub fn minus(&self) -> &VertexSet {
        &self.minus
    }

    pub fn zero(&self) -> &VertexSet {
        &self.zero
    }

    pub fn source(&self) -> &[f64] {
        &self.source
    }
}

/// Balanced two-way split with its exact edge cut.
#[derive(Debug, Clone, PartialEq)]
pub struct Bisection {
    side_s: VertexSet,
    side_sc: VertexSet,
    cut: u64,
}

impl Bisection {
    pub fn side_s(&self) -> &VertexSet {
        &self.side_s
    }

    pub fn side_sc(&self) -> &VertexSet {
        &self.side_sc
    }

    pub fn cut(&self) -> u64 {
        self.cut
    }
}

/// Median of the nondecreasing rearrangement: the middle entry for odd
/// length, the mean of the two middle entries for even length.
pub fn median(v: &[f64]) -> Result<f64, BisectError> {
    if v.is_empty() {
        return Err(BisectError::EmptyVector);
    }
    let mut w = v.to_vec();
    w.sort_by(|a, b| a.partial_cmp(b).expect("entries are finite"));
    let n = w.len();
    Ok(if n % 2 == 1 {
        w[n / 2]
    } else {
        0.5 * (w[n / 2 - 1] + w[n / 2])
    })
}

/// ±1 vector: +1 at entries strictly above the median, -1 elsewhere.
pub fn median_cut(v: &[f64]) -> Result<CutVector, BisectError> {
    let m = median(v)?;
    let values = v.iter().map(|&x| if x > m { 1 } else { -1 }).collect();
    Ok(CutVector::new(values).expect("values are ±1"))
}

fn zero_tol(v: &[f64]) -> f64 {
    let max_abs = v.iter().fold(0.0f64, |acc, &x| acc.max(x.abs()));
    1e-9 * max_abs.max(1.0)
}

/// Classify the entries of `v` into positive / negative / zero index sets.
///
/// Entries within `1e-9 · max(1, ‖v‖_∞)` of zero count as zero, absorbing
/// rounding noise from the eigensolver.
pub fn sign_partition(v: &[f64]) -> Result<SignPartition, BisectError> {
    if v.is_empty() {
        return Err(BisectError::EmptyVector);
    }
    let tol = zero_tol(v);
    let n = v.len();
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    let mut zero = Vec::new();
    for (i, &x) in v.iter().enumerate() {
        if x.abs() <= tol {
            zero.push(i);
        } else if x > 0.0 {
            plus.push(i);
        } else {
            minus.push(i);
        }
    }
    Ok(SignPartition {
        plus: VertexSet::new(n, plus).expect("indices in range"),
        minus: VertexSet::new(n, minus).expect("indices in range"),
        zero: VertexSet::new(n, zero).expect("indices in range"),
        source: v.to_vec(),
    })
}

/// Bisection from the sign pattern of the median-shifted vector.
///
/// `S` starts from the strictly-positive side; zero entries are assigned in
/// ascending index order, each to the currently smaller side (ties toward
/// `S`) subject to the target sizes ⌊n/2⌋ and ⌈n/2⌉. Fails when the sign
/// counts make a balanced split impossible.
pub fn spectral_bisection(g: &Graph, fiedler: &[f64]) -> Result<Bisection, BisectError> {
    let n = g.n();
    if fiedler.len() != n {
        return Err(BisectError::DimensionMismatch { expected: n, got: fiedler.len() });
    }
    let m = median(fiedler)?;
    let shifted: Vec<f64> = fiedler.iter().map(|&x| x - m).collect();
    let p = sign_partition(&shifted)?;

    let target_s = n / 2;
    let target_sc = n - target_s;
    if p.plus.len() > target_s || p.minus.len() > target_sc {
        return Err(BisectError::CannotBalance {
            plus: p.plus.len(),
            minus: p.minus.len(),
            zero: p.zero.len(),
        });
    }

    let mut s: Vec<usize> = p.plus.members().to_vec();
    let mut sc: Vec<usize> = p.minus.members().to_vec();
    for &z in p.zero.members() {
        if s.len() == target_s {
            sc.push(z);
        } else if sc.len() == target_sc {
            s.push(z);
        } else if s.len() <= sc.len() {
            s.push(z);
        } else {
            sc.push(z);
        }
    }
    debug_assert_eq!(s.len(), target_s);

    let side_s = VertexSet::new(n, s).expect("indices in range");
    let side_sc = side_s.complement();
    debug_assert_eq!(side_sc.len(), sc.len());
    let cut = g.cut_cost(&side_s)?;
    Ok(Bisection { side_s, side_sc, cut })
}

/// Check that the subgraphs induced by `i_+ ∪ i_0` and `i_- ∪ i_0` of an
/// eigenvector (no median shift) are both connected.
pub fn fiedler_connectivity_check(g: &Graph, fiedler: &[f64]) -> Result<bool, BisectError> {
    let n = g.n();
    if fiedler.len() != n {
        return Err(BisectError::DimensionMismatch { expected: n, got: fiedler.len() });
    }
    let l = g.laplacian();
    let norm_sq: f64 = fiedler.iter().map(|x| x * x).sum();
    if norm_sq == 0.0 {
        return Err(BisectError::NotAnEigenpair { residual: f64::INFINITY });
    }
    let lv = l.apply(fiedler)?;
    let rayleigh = fiedler.iter().zip(&lv).map(|(a, b)| a * b).sum::<f64>() / norm_sq;
    let residual = libm::sqrt(
        lv.iter()
            .zip(fiedler)
            .map(|(a, b)| {
                let r = a - rayleigh * b;
                r * r
            })
            .sum::<f64>()
            / norm_sq,
    );
    let tol = 1e-8 * l.frobenius_norm().max(1.0);
    if residual > tol {
        return Err(BisectError::NotAnEigenpair { residual });
    }

    let p = sign_partition(fiedler)?;
    let mut both = true;
    for side in [&p.plus, &p.minus] {
        let mut members: Vec<usize> = side.members().to_vec();
        members.extend_from_slice(p.zero.members());
        let set = VertexSet::new(n, members)?;
        if set.is_empty() {
            both = false;
            continue;
        }
        both = both && g.induced_subgraph(&set)?.is_connected();
    }
    Ok(both)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    #[test]
    fn median_examples() {
        assert_eq!(median(&[3.0, 1.0, 2.0]).unwrap(), 2.0);
        assert_eq!(median(&[1.0, 2.0, 3.0, 4.0]).unwrap(), 2.5);
        assert_eq!(median(&[5.0, 5.0, 5.0]).unwrap(), 5.0);
        assert!(matches!(median(&[]), Err(BisectError::EmptyVector)));
    }

    #[test]
    fn median_cut_examples() {
        assert_eq!(
            median_cut(&[1.0, 2.0, 3.0, 4.0]).unwrap().values(),
            &[-1, -1, 1, 1]
        );
        assert_eq!(
            median_cut(&[0.0, 0.0, 0.0, 0.0]).unwrap().values(),
            &[-1, -1, -1, -1]
        );
        assert_eq!(
            median_cut(&[-1.0, -1.0, 1.0, 1.0]).unwrap().values(),
            &[-1, -1, 1, 1]
        );
    }

    #[test]
    fn sign_partition_examples() {
        let p = sign_partition(&[2.0, 0.0, -1.0]).unwrap();
        assert_eq!(p.plus().members(), &[0]);
        assert_eq!(p.zero().members(), &[1]);
        assert_eq!(p.minus().members(), &[2]);

        let p = sign_partition(&[1.0, 2.0, 3.0]).unwrap();
        assert!(p.zero().is_empty());
        assert!(p.minus().is_empty());
    }

    #[test]
    fn sign_partition_absorbs_solver_noise() {
        let p = sign_partition(&[1.0, 1e-15, -1.0]).unwrap();
        assert_eq!(p.zero().members(), &[1]);
    }

    #[test]
    fn bisection_p2() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        let inv_sqrt2 = 1.0 / libm::sqrt(2.0);
        let b = spectral_bisection(&g, &[inv_sqrt2, -inv_sqrt2]).unwrap();
        assert_eq!(b.side_s().members(), &[0]);
        assert_eq!(b.cut(), 1);
    }

    #[test]
    fn bisection_distributes_zeros() {
        // Star K_{1,4}: Fiedler-like vector with several zeros at leaves.
        let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        let v = [0.0, 1.0, -1.0, 0.0, 0.0];
        let b = spectral_bisection(&g, &v).unwrap();
        assert_eq!(b.side_s().len(), 2);
        assert_eq!(b.side_sc().len(), 3);
    }

    #[test]
    fn bisection_balances_tie_heavy_vectors() {
        // The median guarantees |i_+| <= floor(n/2) and |i_-| <= ceil(n/2),
        // so even tie-heavy vectors balance via zero assignment.
        let g = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let b = spectral_bisection(&g, &[5.0, 5.0, 5.0, -100.0]).unwrap();
        assert_eq!(b.side_s().len(), 2);
        let b = spectral_bisection(&g, &[7.0, 7.0, 7.0, 7.0]).unwrap();
        assert_eq!(b.side_s().len(), 2);
    }

    #[test]
    fn connectivity_check_p3() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        // (1, 0, -1)/sqrt(2) is the eigenvector of L(P_3) for eigenvalue 1:
        // L(1,0,-1)^T = (1,0,-1)^T by direct multiplication.
        let inv_sqrt2 = 1.0 / libm::sqrt(2.0);
        let v = [inv_sqrt2, 0.0, -inv_sqrt2];
        assert!(fiedler_connectivity_check(&g, &v).unwrap());
    }

    #[test]
    fn connectivity_check_rejects_non_eigenvector() {
        let g = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        let v = [1.0, 5.0, -2.0];
        assert!(matches!(
            fiedler_connectivity_check(&g, &v),
            Err(BisectError::NotAnEigenpair { .. })
        ));
    }

    #[test]
    fn connectivity_check_k4() {
        let g = Graph::new(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let s = crate::eigen::fiedler_space(&g.laplacian()).unwrap();
        for v in s.basis() {
            assert!(fiedler_connectivity_check(&g, v).unwrap());
        }
    }
}
