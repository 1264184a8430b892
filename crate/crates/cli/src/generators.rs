//! Standard base graphs and the flat family-spec config format.

use std::path::{Path, PathBuf};

use fiedler_core::family::FamilySpec;
use fiedler_core::graph::Graph;

use crate::edgelist;
use crate::HarnessError;

/// A named base-graph generator, parsed from a descriptor string such as
/// `cycle`, `complete_bipartite 2 3`, `hypercube 3`, or `file graph.txt`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseKind {
    Path,
    Cycle,
    Complete,
    CompleteBipartite { p: usize, q: usize },
    Hypercube { d: usize },
    File(PathBuf),
}

impl BaseKind {
    pub fn parse(descriptor: &str) -> Result<Self, HarnessError> {
        let bad = |reason: &str| HarnessError::BadDescriptor {
            descriptor: descriptor.into(),
            reason: reason.into(),
        };
        let mut tokens = descriptor.split_whitespace();
        let kind = tokens.next().ok_or_else(|| bad("empty descriptor"))?;
        let parsed = match kind {
            "path" => BaseKind::Path,
            "cycle" => BaseKind::Cycle,
            "complete" => BaseKind::Complete,
            "complete_bipartite" => {
                let p = tokens.next().and_then(|t| t.parse().ok());
                let q = tokens.next().and_then(|t| t.parse().ok());
                match (p, q) {
                    (Some(p), Some(q)) => BaseKind::CompleteBipartite { p, q },
                    _ => return Err(bad("expected 'complete_bipartite p q'")),
                }
            }
            "hypercube" => match tokens.next().and_then(|t| t.parse().ok()) {
                Some(d) => BaseKind::Hypercube { d },
                None => return Err(bad("expected 'hypercube d'")),
            },
            "file" => match tokens.next() {
                Some(path) => BaseKind::File(PathBuf::from(path)),
                None => return Err(bad("expected 'file <path>'")),
            },
            _ => return Err(bad("unknown kind")),
        };
        if tokens.next().is_some() {
            return Err(bad("trailing tokens"));
        }
        Ok(parsed)
    }

    pub fn descriptor(&self) -> String {
        match self {
            BaseKind::Path => "path".into(),
            BaseKind::Cycle => "cycle".into(),
            BaseKind::Complete => "complete".into(),
            BaseKind::CompleteBipartite { p, q } => format!("complete_bipartite {p} {q}"),
            BaseKind::Hypercube { d } => format!("hypercube {d}"),
            BaseKind::File(path) => format!("file {}", path.display()),
        }
    }
}

/// The named standard graph on `m` vertices.
pub fn base_graph(kind: &BaseKind, m: usize) -> Result<Graph, HarnessError> {
    let bad = |reason: String| HarnessError::BadDescriptor {
        descriptor: kind.descriptor(),
        reason,
    };
    match kind {
        BaseKind::Path => Ok(Graph::new(m, (1..m).map(|i| (i - 1, i)))?),
        BaseKind::Cycle => {
            if m < 3 {
                return Err(bad(format!("cycle needs at least 3 vertices, got {m}")));
            }
            Ok(Graph::new(m, (0..m).map(|i| (i, (i + 1) % m)))?)
        }
        BaseKind::Complete => {
            let edges = (0..m).flat_map(|i| (i + 1..m).map(move |j| (i, j)));
            Ok(Graph::new(m, edges)?)
        }
        BaseKind::CompleteBipartite { p, q } => {
            if p + q != m {
                return Err(bad(format!("p + q = {} but m = {m}", p + q)));
            }
            let p = *p;
            let edges = (0..p).flat_map(|i| (p..m).map(move |j| (i, j)));
            Ok(Graph::new(m, edges)?)
        }
        BaseKind::Hypercube { d } => {
            if m != 1usize << d {
                return Err(bad(format!("hypercube of dimension {d} has {} vertices", 1usize << d)));
            }
            let d = *d;
            let edges = (0..m).flat_map(move |v| {
                (0..d).filter_map(move |bit| {
                    let w = v ^ (1 << bit);
                    (v < w).then_some((v, w))
                })
            });
            Ok(Graph::new(m, edges)?)
        }
        BaseKind::File(path) => {
            let text = std::fs::read_to_string(path)?;
            let g = edgelist::parse_edge_list(&text)?;
            if g.n() != m {
                return Err(bad(format!("file graph has {} vertices, expected {m}", g.n())));
            }
            Ok(g)
        }
    }
}

/// Family instance parameters in flat `key = value` form:
///
/// ```text
/// m = 13
/// base1 = cycle
/// base2 = cycle
/// base3 = cycle
/// base4 = cycle
/// cone = 0
/// ```
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyConfig {
    pub m: usize,
    pub bases: [BaseKind; 4],
    pub cone_count: usize,
}

impl FamilyConfig {
    /// Same base generator for all four blocks.
    pub fn uniform(m: usize, kind: BaseKind, cone_count: usize) -> Self {
        FamilyConfig { m, bases: [kind.clone(), kind.clone(), kind.clone(), kind], cone_count }
    }

    pub fn parse(text: &str) -> Result<Self, HarnessError> {
        let mut m: Option<usize> = None;
        let mut cone: Option<usize> = None;
        let mut bases: [Option<BaseKind>; 4] = [None, None, None, None];
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line.split_once('=').ok_or_else(|| HarnessError::Parse {
                line: idx + 1,
                message: "expected 'key = value'".into(),
            })?;
            let key = key.trim();
            let value = value.trim();
            let parse_usize = |v: &str| {
                v.parse::<usize>().map_err(|_| HarnessError::Parse {
                    line: idx + 1,
                    message: format!("expected integer, got '{v}'"),
                })
            };
            match key {
                "m" => m = Some(parse_usize(value)?),
                "cone" => cone = Some(parse_usize(value)?),
                "base1" | "base2" | "base3" | "base4" => {
                    let slot = key.as_bytes()[4] - b'1';
                    bases[slot as usize] = Some(BaseKind::parse(value)?);
                }
                _ => {
                    return Err(HarnessError::Parse {
                        line: idx + 1,
                        message: format!("unknown key '{key}'"),
                    })
                }
            }
        }
        let m = m.ok_or(HarnessError::Parse { line: 0, message: "missing 'm'".into() })?;
        let mut resolved = Vec::with_capacity(4);
        for (i, b) in bases.into_iter().enumerate() {
            resolved.push(b.ok_or(HarnessError::Parse {
                line: 0,
                message: format!("missing 'base{}'", i + 1),
            })?);
        }
        Ok(FamilyConfig {
            m,
            bases: resolved.try_into().expect("exactly four bases"),
            cone_count: cone.unwrap_or(0),
        })
    }

    pub fn render(&self) -> String {
        let mut out = format!("m = {}\n", self.m);
        for (i, b) in self.bases.iter().enumerate() {
            out.push_str(&format!("base{} = {}\n", i + 1, b.descriptor()));
        }
        out.push_str(&format!("cone = {}\n", self.cone_count));
        out
    }

    /// Resolve the generators and validate the instance.
    pub fn build(&self) -> Result<FamilySpec, HarnessError> {
        let graphs = [
            base_graph(&self.bases[0], self.m)?,
            base_graph(&self.bases[1], self.m)?,
            base_graph(&self.bases[2], self.m)?,
            base_graph(&self.bases[3], self.m)?,
        ];
        Ok(FamilySpec::new(self.m, graphs, self.cone_count)?)
    }
}

/// Helper for file-relative descriptors: rebase `file` paths onto `dir`.
pub fn rebase_files(config: &mut FamilyConfig, dir: &Path) {
    for b in config.bases.iter_mut() {
        if let BaseKind::File(p) = b {
            if p.is_relative() {
                *p = dir.join(&p);
            }
        }
    }
}
