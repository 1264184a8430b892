//! The structured four-block graph family and its closed-form spectrum.
//!
//! The coupling matrix joins four m-vertex blocks with a perfect matching
//! between blocks 1-2 and 3-4 and a complete bipartite join between blocks
//! 2-3. Its full eigendecomposition is available in closed form, which lets
//! the harness verify the numeric solver and the bisection behavior against
//! an independent analytic oracle.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::eigen::{self, EigenError};
use crate::graph::{Graph, GraphError, Laplacian};

/// Margin added to the block connectivity threshold; the construction
/// breaks down at exact equality, so a strict budget is enforced.
pub const CONNECTIVITY_MARGIN: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub enum FamilyError {
    /// Block size must be at least 2.
    BlockTooSmall { m: usize },
    /// At most 3 universal vertices may be appended.
    TooManyCones { cone_count: usize },
    /// A base graph has the wrong order.
    WrongBlockOrder { block: usize, got: usize, expected: usize },
    /// A base graph is disconnected.
    BlockDisconnected { block: usize },
    /// A base graph's algebraic connectivity is below the required budget.
    ConnectivityBudget { block: usize, actual: f64, required: f64 },
    /// Operation requires the un-coned (k = 0) instance.
    ConesNotSupported,
    Graph(GraphError),
    Eigen(EigenError),
}

impl fmt::Display for FamilyError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyError::BlockTooSmall { m } => write!(f, "block size {m} < 2"),
            FamilyError::TooManyCones { cone_count } => {
                write!(f, "cone count {cone_count} exceeds 3")
            }
            FamilyError::WrongBlockOrder { block, got, expected } => {
                write!(f, "base graph {block} has {got} vertices, expected {expected}")
            }
            FamilyError::BlockDisconnected { block } => {
                write!(f, "base graph {block} is disconnected")
            }
            FamilyError::ConnectivityBudget { block, actual, required } => write!(
                f,
                "base graph {block}: algebraic connectivity {actual} below required {required}"
            ),
            FamilyError::ConesNotSupported => {
                write!(f, "operation requires a cone-free instance")
            }
            FamilyError::Graph(e) => write!(f, "{e}"),
            FamilyError::Eigen(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for FamilyError {}

impl From<GraphError> for FamilyError {
    fn from(e: GraphError) -> Self {
        FamilyError::Graph(e)
    }
}

impl From<EigenError> for FamilyError {
    fn from(e: EigenError) -> Self {
        FamilyError::Eigen(e)
    }
}

/// The two simple coupling eigenvalues `m + 1 ± √(m² + 1)`.
pub fn lambda_pm(m: usize) -> (f64, f64) {
    let m = m as f64;
    let r = libm::sqrt(m * m + 1.0);
    (m + 1.0 - r, m + 1.0 + r)
}

/// The two repeated coupling eigenvalues `m/2 + 1 ± √((m/2)² + 1)`.
pub fn mu_pm(m: usize) -> (f64, f64) {
    let h = m as f64 / 2.0;
    let r = libm::sqrt(h * h + 1.0);
    (h + 1.0 - r, h + 1.0 + r)
}

/// Parameters of one family instance: block size, the four base graphs,
/// and the number of appended universal ("cone") vertices.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilySpec {
    m: usize,
    base: [Graph; 4],
    cone_count: usize,
}

impl FamilySpec {
    /// Validates block sizes, connectivity, and the spectral budget
    /// `a(G_j) ≥ λ_- - μ_- + margin` for every base graph.
    pub fn new(m: usize, base: [Graph; 4], cone_count: usize) -> Result<Self, FamilyError> {
        if m < 2 {
            return Err(FamilyError::BlockTooSmall { m });
        }
        if cone_count > 3 {
            return Err(FamilyError::TooManyCones { cone_count });
        }
        let (lambda_minus, _) = lambda_pm(m);
        let (mu_minus, _) = mu_pm(m);
        let required = lambda_minus - mu_minus + CONNECTIVITY_MARGIN;
        for (j, g) in base.iter().enumerate() {
            if g.n() != m {
                return Err(FamilyError::WrongBlockOrder { block: j, got: g.n(), expected: m });
            }
            if !g.is_connected() {
                return Err(FamilyError::BlockDisconnected { block: j });
            }
            let a = eigen::algebraic_connectivity(&g.laplacian())?;
            if a < required {
                return Err(FamilyError::ConnectivityBudget { block: j, actual: a, required });
            }
        }
        Ok(FamilySpec { m, base, cone_count })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn base_graphs(&self) -> &[Graph; 4] {
        &self.base
    }

    pub fn cone_count(&self) -> usize {
        self.cone_count
    }

    /// Total order `4m + k`.
    pub fn order(&self) -> usize {
        4 * self.m + self.cone_count
    }
}

/// The 4m×4m coupling Laplacian: identity matchings between blocks 1-2
/// and 3-4, an all-ones join between blocks 2-3.
pub fn build_l_star(m: usize) -> Result<Laplacian, FamilyError> {
    if m < 2 {
        return Err(FamilyError::BlockTooSmall { m });
    }
    let n = 4 * m;
    let mut data = vec![0.0; n * n];
    let mf = m as f64;
    for i in 0..m {
        // Diagonal blocks I, (m+1)I, (m+1)I, I.
        data[i * n + i] = 1.0;
        data[(m + i) * n + (m + i)] = mf + 1.0;
        data[(2 * m + i) * n + (2 * m + i)] = mf + 1.0;
        data[(3 * m + i) * n + (3 * m + i)] = 1.0;
        // Matchings: -I between blocks 1-2 and 3-4.
        data[i * n + (m + i)] = -1.0;
        data[(m + i) * n + i] = -1.0;
        data[(2 * m + i) * n + (3 * m + i)] = -1.0;
        data[(3 * m + i) * n + (2 * m + i)] = -1.0;
        // Join: -11^T between blocks 2-3.
        for j in 0..m {
            data[(m + i) * n + (2 * m + j)] = -1.0;
            data[(2 * m + j) * n + (m + i)] = -1.0;
        }
    }
    Ok(Laplacian::from_entries(n, data).expect("block structure is a valid Laplacian"))
}

/// Tensor (Kronecker) product of two vectors: `(a_1 b, …, a_p b)`.
pub fn tensor(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        out.extend(b.iter().map(|&y| x * y));
    }
    out
}

/// All 4m closed-form eigenpairs of the coupling matrix, unit-normalized.
#[derive(Debug, Clone, PartialEq)]
pub struct AnalyticSpectrum {
    lambda_minus: f64,
    lambda_plus: f64,
    mu_minus: f64,
    mu_plus: f64,
    eigenpairs: Vec<(f64, Vec<f64>)>,
}

impl AnalyticSpectrum {
    pub fn lambda_minus(&self) -> f64 {
        self.lambda_minus
    }

    pub fn lambda_plus(&self) -> f64 {
        self.lambda_plus
    }

    pub fn mu_minus(&self) -> f64 {
        self.mu_minus
    }

    pub fn mu_plus(&self) -> f64 {
        self.mu_plus
    }

    pub fn eigenpairs(&self) -> &[(f64, Vec<f64>)] {
        &self.eigenpairs
    }

    /// Eigenvalues sorted ascending, with multiplicity.
    pub fn sorted_eigenvalues(&self) -> Vec<f64> {
        let mut vals: Vec<f64> = self.eigenpairs.iter().map(|(v, _)| *v).collect();
        vals.sort_by(|a, b| a.partial_cmp(b).expect("finite"));
        vals
    }

    /// The unit eigenvector for the smallest nonzero simple eigenvalue,
    /// `(1, 1-λ_-, λ_--1, -1)ᵀ ⊗ 1`.
    pub fn phi_minus(&self) -> &[f64] {
        &self.eigenpairs[1].1
    }
}

fn normalized(mut v: Vec<f64>) -> Vec<f64> {
    let norm = libm::sqrt(v.iter().map(|x| x * x).sum());
    for x in v.iter_mut() {
        *x /= norm;
    }
    v
}

/// Orthonormal basis of the hyperplane orthogonal to the all-ones vector
/// in R^m: Gram-Schmidt over the differences `e_k - e_{k+1}` in index order.
fn ones_complement_basis(m: usize) -> Vec<Vec<f64>> {
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(m - 1);
    for k in 0..m - 1 {
        let mut v = vec![0.0; m];
        v[k] = 1.0;
        v[k + 1] = -1.0;
        for b in &basis {
            let proj: f64 = v.iter().zip(b).map(|(a, c)| a * c).sum();
            for (x, c) in v.iter_mut().zip(b) {
                *x -= proj * c;
            }
        }
        basis.push(normalized(v));
    }
    basis
}

/// The closed-form eigendecomposition of `build_l_star(m)`.
///
/// One zero eigenvalue (all-ones vector), two simple eigenvalues λ_± with
/// block-constant eigenvectors, two eigenvalues μ_± of multiplicity
/// `2m - 2` supported on the outer/inner block pairs, and the eigenvalue 2
/// with eigenvector `(1, -1, -1, 1)ᵀ ⊗ 1`.
pub fn analytic_spectrum(m: usize) -> Result<AnalyticSpectrum, FamilyError> {
    if m < 2 {
        return Err(FamilyError::BlockTooSmall { m });
    }
    let (lambda_minus, lambda_plus) = lambda_pm(m);
    let (mu_minus, mu_plus) = mu_pm(m);
    let ones = vec![1.0; m];
    let n = 4 * m;

    let mut pairs: Vec<(f64, Vec<f64>)> = Vec::with_capacity(n);
    pairs.push((0.0, normalized(vec![1.0; n])));
    for &lam in &[lambda_minus, lambda_plus] {
        let profile = [1.0, 1.0 - lam, lam - 1.0, -1.0];
        pairs.push((lam, normalized(tensor(&profile, &ones))));
    }
    let xi = ones_complement_basis(m);
    for &mu in &[mu_minus, mu_plus] {
        for k in 0..m - 1 {
            pairs.push((mu, normalized(tensor(&[1.0, 1.0 - mu, 0.0, 0.0], &xi[k]))));
        }
        for k in 0..m - 1 {
            pairs.push((mu, normalized(tensor(&[0.0, 0.0, 1.0 - mu, 1.0], &xi[k]))));
        }
    }
    pairs.push((2.0, normalized(tensor(&[1.0, -1.0, -1.0, 1.0], &ones))));
    debug_assert_eq!(pairs.len(), n);

    Ok(AnalyticSpectrum { lambda_minus, lambda_plus, mu_minus, mu_plus, eigenpairs: pairs })
}

/// Add one vertex adjacent to every existing vertex.
pub fn cone_augment(g: &Graph) -> Graph {
    let n = g.n();
    let edges = g
        .edges()
        .iter()
        .copied()
        .chain((0..n).map(|i| (i, n)));
    Graph::new(n + 1, edges).expect("augmented graph is valid")
}

/// Assemble the family graph: four base blocks, the matchings 1-2 and 3-4,
/// the complete bipartite join 2-3, then `cone_count` universal vertices.
///
/// The Laplacian of the cone-free part is checked entrywise against the
/// block sum of the base Laplacians and the coupling matrix.
pub fn build_family(spec: &FamilySpec) -> Result<(Graph, Laplacian), FamilyError> {
    let m = spec.m;
    let g0 = Graph::disjoint_union(&spec.base)?;
    let mut edges: Vec<(usize, usize)> = g0.edges().to_vec();
    for i in 0..m {
        edges.push((i, m + i));
        edges.push((2 * m + i, 3 * m + i));
        for j in 0..m {
            edges.push((m + i, 2 * m + j));
        }
    }
    let mut g = Graph::new(4 * m, edges)?;

    let expected = g0.laplacian().add(&build_l_star(m)?)?;
    assert_eq!(
        g.laplacian(),
        expected,
        "assembled graph Laplacian must equal the block sum"
    );

    for _ in 0..spec.cone_count {
        g = cone_augment(&g);
    }
    let l = g.laplacian();
    Ok((g, l))
}

/// Orthonormal bases of the two coupling-invariant subspaces orthogonal to
/// the all-ones vector: the 3-dimensional block-constant space and its
/// `4m - 4`-dimensional complement.
#[derive(Debug, Clone, PartialEq)]
pub struct SubspaceDecomposition {
    w0_basis: Vec<Vec<f64>>,
    w1_basis: Vec<Vec<f64>>,
}

impl SubspaceDecomposition {
    pub fn w0_basis(&self) -> &[Vec<f64>] {
        &self.w0_basis
    }

    pub fn w1_basis(&self) -> &[Vec<f64>] {
        &self.w1_basis
    }
}

pub fn subspace_decomposition(m: usize) -> Result<SubspaceDecomposition, FamilyError> {
    let sp = analytic_spectrum(m)?;
    let pairs = sp.eigenpairs();
    // Layout: [0] ones, [1] phi_-, [2] phi_+, [3..4m-1] psi vectors, [4m-1] phi_2.
    let n = pairs.len();
    let w0_basis = vec![pairs[1].1.clone(), pairs[2].1.clone(), pairs[n - 1].1.clone()];
    let w1_basis = pairs[3..n - 1].iter().map(|(_, v)| v.clone()).collect();
    Ok(SubspaceDecomposition { w0_basis, w1_basis })
}

/// Certify that the full Laplacian's Rayleigh quotient over the complement
/// subspace stays above `min_j a(G_j) + μ_-`.
///
/// Returns `(computed minimum, analytic floor)`; the bisection analysis
/// needs the computed value to clear λ_-, which the floor guarantees under
/// the spec's connectivity budget.
pub fn rayleigh_floor(spec: &FamilySpec) -> Result<(f64, f64), FamilyError> {
    if spec.cone_count != 0 {
        return Err(FamilyError::ConesNotSupported);
    }
    let (_, l) = build_family(spec)?;
    let sd = subspace_decomposition(spec.m)?;
    let computed = eigen::restricted_min_eigenvalue(&l, sd.w1_basis())?;
    let mut min_a = f64::INFINITY;
    for g in &spec.base {
        let a = eigen::algebraic_connectivity(&g.laplacian())?;
        min_a = min_a.min(a);
    }
    let (mu_minus, _) = mu_pm(spec.m);
    Ok((computed, min_a + mu_minus))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::eigen::{algebraic_connectivity, eigendecompose};

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((i, j));
            }
        }
        Graph::new(n, e).unwrap()
    }

    pub(crate) fn k2_spec() -> FamilySpec {
        let k2 = complete(2);
        FamilySpec::new(2, [k2.clone(), k2.clone(), k2.clone(), k2], 0).unwrap()
    }

    #[test]
    fn l_star_m2_blocks() {
        let l = build_l_star(2).unwrap();
        assert_eq!(l.n(), 8);
        // Diagonal blocks I, 3I, 3I, I.
        for i in 0..2 {
            assert_eq!(l.get(i, i), 1.0);
            assert_eq!(l.get(2 + i, 2 + i), 3.0);
            assert_eq!(l.get(4 + i, 4 + i), 3.0);
            assert_eq!(l.get(6 + i, 6 + i), 1.0);
            // Matchings.
            assert_eq!(l.get(i, 2 + i), -1.0);
            assert_eq!(l.get(4 + i, 6 + i), -1.0);
            // Join between the middle blocks.
            for j in 0..2 {
                assert_eq!(l.get(2 + i, 4 + j), -1.0);
            }
        }
        // No coupling between the outer blocks.
        assert_eq!(l.get(0, 6), 0.0);
    }

    #[test]
    fn l_star_row_sums_and_kernel() {
        let l = build_l_star(5).unwrap();
        let n = l.n();
        for i in 0..n {
            let s: f64 = (0..n).map(|j| l.get(i, j)).sum();
            assert_eq!(s, 0.0);
        }
        let ones = vec![1.0; n];
        assert_eq!(l.apply(&ones).unwrap(), vec![0.0; n]);
    }

    #[test]
    fn l_star_rejects_small_m() {
        assert!(matches!(build_l_star(1), Err(FamilyError::BlockTooSmall { m: 1 })));
    }

    #[test]
    fn tensor_examples() {
        assert_eq!(tensor(&[1.0, -1.0], &[1.0, 1.0]), vec![1.0, 1.0, -1.0, -1.0]);
        assert_eq!(tensor(&[1.0], &[2.0, 3.0]), vec![2.0, 3.0]);
        let v = tensor(&[1.0, -1.0, -1.0, 1.0], &[1.0, 1.0]);
        assert_eq!(v, vec![1.0, 1.0, -1.0, -1.0, -1.0, -1.0, 1.0, 1.0]);
    }

    #[test]
    fn analytic_spectrum_m2_values() {
        let sp = analytic_spectrum(2).unwrap();
        let s5 = libm::sqrt(5.0);
        let s2 = libm::sqrt(2.0);
        assert!((sp.lambda_minus() - (3.0 - s5)).abs() < 1e-14);
        assert!((sp.lambda_plus() - (3.0 + s5)).abs() < 1e-14);
        assert!((sp.mu_minus() - (2.0 - s2)).abs() < 1e-14);
        assert!((sp.mu_plus() - (2.0 + s2)).abs() < 1e-14);
        let vals = sp.sorted_eigenvalues();
        // 2 - sqrt(2) < 3 - sqrt(5): the repeated mu_- sorts before lambda_-.
        let want = [0.0, 2.0 - s2, 2.0 - s2, 3.0 - s5, 2.0, 2.0 + s2, 2.0 + s2, 3.0 + s5];
        assert_eq!(vals.len(), 8);
        for (got, want) in vals.iter().zip(want) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn analytic_pairs_are_residual_exact() {
        for m in [2, 3, 5] {
            let l = build_l_star(m).unwrap();
            let tol = 1e-10 * l.frobenius_norm().max(1.0);
            let sp = analytic_spectrum(m).unwrap();
            for (lam, v) in sp.eigenpairs() {
                let lv = l.apply(v).unwrap();
                let res = libm::sqrt(
                    lv.iter()
                        .zip(v)
                        .map(|(a, b)| {
                            let r = a - lam * b;
                            r * r
                        })
                        .sum::<f64>(),
                );
                assert!(res <= tol, "m={m} lambda={lam} residual={res:e}");
            }
        }
    }

    #[test]
    fn gap_estimate_small_m() {
        let sp = analytic_spectrum(2).unwrap();
        let gap = sp.lambda_minus() - sp.mu_minus();
        assert!((gap - (1.0 - libm::sqrt(5.0) + libm::sqrt(2.0))).abs() < 1e-12);
        assert!(gap > 0.0 && gap < 0.5);
    }

    #[test]
    fn spec_validation() {
        let k2 = complete(2);
        assert!(matches!(
            FamilySpec::new(1, [k2.clone(), k2.clone(), k2.clone(), k2.clone()], 0),
            Err(FamilyError::BlockTooSmall { .. })
        ));
        assert!(matches!(
            FamilySpec::new(2, [k2.clone(), k2.clone(), k2.clone(), k2.clone()], 4),
            Err(FamilyError::TooManyCones { .. })
        ));
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert!(matches!(
            FamilySpec::new(2, [k2.clone(), p3, k2.clone(), k2.clone()], 0),
            Err(FamilyError::WrongBlockOrder { block: 1, .. })
        ));
        let disc = Graph::empty(2).unwrap();
        assert!(matches!(
            FamilySpec::new(2, [k2.clone(), k2.clone(), disc, k2.clone()], 0),
            Err(FamilyError::BlockDisconnected { block: 2 })
        ));
    }

    #[test]
    fn spec_rejects_low_connectivity_blocks() {
        // a(P_m) = 2(1 - cos(pi/m)) ~ pi^2/m^2 drops below the budget
        // (~ 1/(2m)) once m exceeds 2*pi^2; m = 20 is safely past that.
        let m = 20;
        let path = Graph::new(m, (0..m - 1).map(|i| (i, i + 1))).unwrap();
        let (lambda_minus, _) = lambda_pm(m);
        let (mu_minus, _) = mu_pm(m);
        let a = algebraic_connectivity(&path.laplacian()).unwrap();
        assert!(a < lambda_minus - mu_minus + CONNECTIVITY_MARGIN);
        let c = cycle(m);
        assert!(matches!(
            FamilySpec::new(m, [path, c.clone(), c.clone(), c], 0),
            Err(FamilyError::ConnectivityBudget { block: 0, .. })
        ));
    }

    #[test]
    fn build_family_m2_edge_count() {
        let (g, l) = build_family(&k2_spec()).unwrap();
        assert_eq!(g.n(), 8);
        // 4 intra-block + 2 matching + 4 join + 2 matching.
        assert_eq!(g.edge_count(), 12);
        assert_eq!(l, g.laplacian());
        assert!(g.is_connected());
    }

    #[test]
    fn build_family_m3_cycles_connectivity() {
        let c3 = cycle(3);
        let spec = FamilySpec::new(3, [c3.clone(), c3.clone(), c3.clone(), c3], 0).unwrap();
        let (_, l) = build_family(&spec).unwrap();
        let a = algebraic_connectivity(&l).unwrap();
        let expected = 4.0 - libm::sqrt(10.0);
        assert!((a - expected).abs() < 1e-8);
    }

    #[test]
    fn build_family_with_cones_keeps_zeroed_fiedler_entries() {
        let c3 = cycle(3);
        let spec = FamilySpec::new(3, [c3.clone(), c3.clone(), c3.clone(), c3], 2).unwrap();
        let (g, l) = build_family(&spec).unwrap();
        assert_eq!(g.n(), 14);
        let es = crate::eigen::fiedler_space(&l).unwrap();
        assert_eq!(es.multiplicity(), 1);
        let v = &es.basis()[0];
        assert!(v[12].abs() < 1e-9);
        assert!(v[13].abs() < 1e-9);
    }

    #[test]
    fn cone_augment_examples() {
        let k2 = complete(2);
        let k3 = cone_augment(&k2);
        assert_eq!(k3, complete(3));
        let s = eigendecompose(&k3.laplacian()).unwrap();
        let want = [0.0, 3.0, 3.0];
        for (got, want) in s.eigenvalues().iter().zip(want) {
            assert!((got - want).abs() < 1e-10);
        }
    }

    #[test]
    fn cone_augment_preserves_eigenvectors() {
        let g = cycle(5);
        let l = g.laplacian();
        let s = eigendecompose(&l).unwrap();
        let gh = cone_augment(&g);
        let lh = gh.laplacian();
        for k in 1..5 {
            let mut v: Vec<f64> = s.eigenvector(k).to_vec();
            v.push(0.0);
            let lam = s.eigenvalues()[k] + 1.0;
            let lv = lh.apply(&v).unwrap();
            for (a, b) in lv.iter().zip(&v) {
                assert!((a - lam * b).abs() < 1e-9);
            }
        }
    }

    #[test]
    fn subspace_dimensions_and_orthogonality() {
        let sd = subspace_decomposition(2).unwrap();
        assert_eq!(sd.w0_basis().len(), 3);
        assert_eq!(sd.w1_basis().len(), 4);
        for a in sd.w0_basis() {
            for b in sd.w1_basis() {
                let dot: f64 = a.iter().zip(b).map(|(x, y)| x * y).sum();
                assert!(dot.abs() < 1e-10);
            }
        }
        let ones = vec![1.0 / libm::sqrt(8.0); 8];
        for v in sd.w0_basis().iter().chain(sd.w1_basis()) {
            let dot: f64 = ones.iter().zip(v).map(|(x, y)| x * y).sum();
            assert!(dot.abs() < 1e-10);
        }
    }

    #[test]
    fn w1_is_invariant_under_full_laplacian() {
        let c3 = cycle(3);
        let spec = FamilySpec::new(3, [c3.clone(), c3.clone(), c3.clone(), c3], 0).unwrap();
        let (_, l) = build_family(&spec).unwrap();
        let sd = subspace_decomposition(3).unwrap();
        // L w should stay inside span(w1): residual after projection onto
        // w1 ∪ {ones} is small.
        let n = l.n();
        let ones = vec![1.0 / libm::sqrt(n as f64); n];
        for w in sd.w1_basis() {
            let lw = l.apply(w).unwrap();
            let mut resid = lw.clone();
            for b in sd.w1_basis().iter().chain(core::iter::once(&ones)) {
                let proj: f64 = resid.iter().zip(b).map(|(x, y)| x * y).sum();
                for (r, c) in resid.iter_mut().zip(b) {
                    *r -= proj * c;
                }
            }
            let norm = libm::sqrt(resid.iter().map(|x| x * x).sum::<f64>());
            assert!(norm < 1e-9, "projection residual {norm:e}");
        }
    }

    #[test]
    fn rayleigh_floor_holds() {
        let c3 = cycle(3);
        let spec = FamilySpec::new(3, [c3.clone(), c3.clone(), c3.clone(), c3], 0).unwrap();
        let (computed, floor) = rayleigh_floor(&spec).unwrap();
        assert!(computed >= floor - 1e-9);
        let (lambda_minus, _) = lambda_pm(3);
        assert!(computed > lambda_minus);

        // K_2 blocks: floor = a(K_2) + mu_- = 2 + (2 - sqrt(2)).
        let (_, floor) = rayleigh_floor(&k2_spec()).unwrap();
        assert!((floor - (4.0 - libm::sqrt(2.0))).abs() < 1e-12);
    }

    #[test]
    fn rayleigh_min_over_w0_is_lambda_minus() {
        let c3 = cycle(3);
        let spec = FamilySpec::new(3, [c3.clone(), c3.clone(), c3.clone(), c3], 0).unwrap();
        let (_, l) = build_family(&spec).unwrap();
        let sd = subspace_decomposition(3).unwrap();
        let min_w0 = crate::eigen::restricted_min_eigenvalue(&l, sd.w0_basis()).unwrap();
        let (lambda_minus, _) = lambda_pm(3);
        assert!((min_w0 - lambda_minus).abs() < 1e-9);
    }
}
