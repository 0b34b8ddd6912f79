//! The diamond cone below λ as a graph on quasistandard tableaux.
//!
//! Nodes are push(T) for T ∈ SS^λ. For each simple generator E_{i,i+1}, the vector
//! E_{i,i+1}·e_T is expanded in the semistandard basis, and every S with a nonzero
//! coefficient gives an edge push(T) → push(S) labelled by i and that coefficient.

use std::collections::BTreeMap;
use std::fmt::Write;

use diamond_cone::extraction::push;
use diamond_cone::rational::format_rational;
use diamond_cone::superspace::{eij_action, young_vector, Budget, Straightener};
use diamond_cone::tableaux::enumerate_semistandard;
use diamond_cone::{Error, HookShape, HookTableau, Result};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    /// The generator E_{i,i+1}.
    pub i: u8,
    pub coeff: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Cone {
    pub shape: HookShape,
    pub nodes: Vec<HookTableau>,
    pub edges: Vec<Edge>,
    /// False when edges were dropped because the tensor budget was exceeded.
    pub complete: bool,
}

pub fn build(lambda: &HookShape, budget: Budget) -> Result<Cone> {
    let ss = enumerate_semistandard(lambda);
    let images: Vec<HookTableau> = ss.iter().map(push).collect();
    let mut nodes = images.clone();
    nodes.sort();
    nodes.dedup();
    let index: BTreeMap<&HookTableau, usize> =
        nodes.iter().enumerate().map(|(k, u)| (u, k)).collect();
    let straightener = match Straightener::new(lambda, budget) {
        Ok(s) => s,
        Err(Error::BudgetExceeded { .. }) => {
            return Ok(Cone {
                shape: lambda.clone(),
                nodes,
                edges: vec![],
                complete: false,
            });
        }
        Err(e) => return Err(e),
    };
    let pushed: BTreeMap<&HookTableau, &HookTableau> = ss.iter().zip(&images).collect();
    let mut edges = Vec::new();
    for (t, u) in ss.iter().zip(&images) {
        let v = young_vector(t);
        for i in 1..lambda.sig().letters() as u8 {
            let image = straightener.straighten_tensor(&eij_action(i, i + 1, &v)?)?;
            for (s, c) in image.iter() {
                edges.push(Edge {
                    from: index[u],
                    to: index[pushed[s]],
                    i,
                    coeff: format_rational(c),
                });
            }
        }
    }
    edges.sort_by_key(|x| (x.from, x.to, x.i));
    Ok(Cone {
        shape: lambda.clone(),
        nodes,
        edges,
        complete: true,
    })
}

fn label(u: &HookTableau) -> String {
    if u.boxes() == 0 {
        "0".to_string()
    } else {
        u.to_string().lines().collect::<Vec<_>>().join("\\n")
    }
}

pub fn to_dot(cone: &Cone) -> String {
    let mut out = String::new();
    writeln!(out, "digraph cone {{").unwrap();
    writeln!(out, "  label=\"{}\";", cone.shape).unwrap();
    writeln!(out, "  node [shape=box, fontname=\"monospace\"];").unwrap();
    for (k, u) in cone.nodes.iter().enumerate() {
        writeln!(out, "  n{k} [label=\"{}\"];", label(u)).unwrap();
    }
    for e in &cone.edges {
        writeln!(
            out,
            "  n{} -> n{} [label=\"E{}{} {}\"];",
            e.from,
            e.to,
            e.i,
            e.i + 1,
            e.coeff
        )
        .unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}
