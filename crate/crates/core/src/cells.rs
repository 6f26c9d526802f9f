//! Kazhdan–Lusztig cells and the type A Robinson–Schensted labelling.

use std::collections::BTreeMap;

use petgraph::algo::tarjan_scc;
use petgraph::graph::DiGraph;
use serde::{Deserialize, Serialize};

use crate::coxeter::{Coxeter, WeylElement};
use crate::error::{Error, Result};
use crate::kl::KlTable;
use crate::orbits::OrbitLabel;
use crate::partitions::{Family, LieType, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CellKind {
    Left,
    Right,
    TwoSided,
}

impl std::str::FromStr for CellKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(CellKind::Left),
            "right" => Ok(CellKind::Right),
            "two-sided" | "twosided" | "two_sided" => Ok(CellKind::TwoSided),
            _ => Err(Error::Parse(format!("unknown cell kind {s:?}"))),
        }
    }
}

/// Cells of one kind. Cell ids follow the smallest element id they contain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CellPartition {
    pub kind: CellKind,
    pub cell_of: Vec<u32>,
    pub cells: Vec<Vec<u32>>,
}

impl CellPartition {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.cells.iter().map(Vec::len).collect()
    }

    /// Whether every cell of `self` lies inside a cell of `coarser`.
    pub fn refines(&self, coarser: &CellPartition) -> bool {
        self.cells.iter().all(|c| c.iter().all(|&w| coarser.cell_of[w as usize] == coarser.cell_of[c[0] as usize]))
    }
}

/// Strongly connected components of the preorder generated by
/// `x → y` whenever `μ(x,y) ≠ 0` (either order) and `D(x) ⊄ D(y)`; left
/// cells use left descent sets, right cells right ones, two-sided cells both.
pub fn compute_cells<G: Coxeter + ?Sized>(g: &G, kl: &KlTable, kind: CellKind) -> CellPartition {
    let n = g.order();
    let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(n, 0);
    let nodes: Vec<_> = (0..n).map(|_| graph.add_node(())).collect();
    let use_left = matches!(kind, CellKind::Left | CellKind::TwoSided);
    let use_right = matches!(kind, CellKind::Right | CellKind::TwoSided);
    let not_subset = |a: u32, b: u32| a & !b != 0;
    for w in 0..n as u32 {
        for &(x, _) in kl.mu_list(w) {
            for (on, desc) in [
                (use_left, (g.left_descent_mask(x), g.left_descent_mask(w))),
                (use_right, (g.right_descent_mask(x), g.right_descent_mask(w))),
            ] {
                if !on {
                    continue;
                }
                if not_subset(desc.0, desc.1) {
                    graph.add_edge(nodes[x as usize], nodes[w as usize], ());
                }
                if not_subset(desc.1, desc.0) {
                    graph.add_edge(nodes[w as usize], nodes[x as usize], ());
                }
            }
        }
    }
    let mut cells: Vec<Vec<u32>> = tarjan_scc(&graph)
        .into_iter()
        .map(|c| {
            let mut v: Vec<u32> = c.into_iter().map(|i| i.index() as u32).collect();
            v.sort_unstable();
            v
        })
        .collect();
    cells.sort();
    let mut cell_of = vec![0u32; n];
    for (k, c) in cells.iter().enumerate() {
        for &w in c {
            cell_of[w as usize] = k as u32;
        }
    }
    CellPartition { kind, cell_of, cells }
}

/// Rows of a Young tableau, top row first.
pub type Tableau = Vec<Vec<u32>>;

pub fn tableau_shape(t: &Tableau) -> Partition {
    Partition::new(t.iter().map(|r| r.len() as u32).collect()).expect("rows are weakly decreasing")
}

/// Robinson–Schensted row insertion of the one-line form of a permutation:
/// `(insertion P, recording Q)`.
pub fn rsk(word: &[u32]) -> (Tableau, Tableau) {
    let mut p: Tableau = Vec::new();
    let mut q: Tableau = Vec::new();
    for (step, &a) in word.iter().enumerate() {
        let mut x = a;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![step as u32 + 1]);
                break;
            }
            match p[row].iter().position(|&y| y > x) {
                Some(k) => {
                    x = std::mem::replace(&mut p[row][k], x);
                    row += 1;
                }
                None => {
                    p[row].push(x);
                    q[row].push(step as u32 + 1);
                    break;
                }
            }
        }
    }
    (p, q)
}

fn require_type_a(ty: LieType) -> Result<()> {
    if ty.family() != Family::A {
        return Err(Error::UnsupportedType {
            family: ty.family().letter(),
            reason: "RSK labels exist for symmetric groups only".into(),
        });
    }
    Ok(())
}

/// RSK pair of a type A element. The recording tableau determines the left
/// cell, the common shape the two-sided cell.
pub fn rsk_label(w: &WeylElement) -> Result<(Tableau, Tableau)> {
    require_type_a(w.ty)?;
    let word: Vec<u32> = w.one_line.iter().map(|&a| a as u32).collect();
    Ok(rsk(&word))
}

/// Orbit attached to a type A two-sided cell: the transpose of the common
/// RSK shape, so the identity's cell goes to the zero orbit.
pub fn cell_orbit_type_a(cell: &[WeylElement]) -> Result<OrbitLabel> {
    let first = cell.first().ok_or_else(|| Error::InvalidGroupData("empty cell".into()))?;
    require_type_a(first.ty)?;
    let shape = tableau_shape(&rsk_label(first)?.0);
    for w in &cell[1..] {
        if tableau_shape(&rsk_label(w)?.0) != shape {
            return Err(Error::InvalidGroupData("elements have different RSK shapes".into()));
        }
    }
    OrbitLabel::new(first.ty, shape.transpose())
}

/// The involution in each type A left cell, keyed by left cell id.
pub fn duflo_involutions_type_a<G: Coxeter + ?Sized>(
    g: &G,
    ty: LieType,
    left: &CellPartition,
) -> Result<BTreeMap<u32, u32>> {
    require_type_a(ty)?;
    let mut out = BTreeMap::new();
    for (k, cell) in left.cells.iter().enumerate() {
        let invs: Vec<u32> = cell.iter().copied().filter(|&w| g.inverse(w) == w).collect();
        if invs.len() != 1 {
            return Err(Error::InvalidGroupData(format!("left cell {k} has {} involutions", invs.len())));
        }
        out.insert(k as u32, invs[0]);
    }
    Ok(out)
}
