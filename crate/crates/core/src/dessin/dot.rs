//! Graphviz export of the bipartite edge graph of a dessin.

use std::fmt::Write;

use super::passport::MonodromyTriple;

/// One node `b<i>` per σ₀-cycle, one node `w<j>` per σ₁-cycle (both
/// numbered from 1 in order of their smallest edge) and one edge per
/// point, labelled by the point.
pub fn export_dot(t: &MonodromyTriple) -> String {
    let owner = |cycles: &[Vec<usize>]| {
        let mut v = vec![0; t.degree()];
        for (k, c) in cycles.iter().enumerate() {
            for &e in c {
                v[e] = k + 1;
            }
        }
        v
    };
    let black = t.sigma0.cycles();
    let white = t.sigma1.cycles();
    let (bo, wo) = (owner(&black), owner(&white));
    let mut s = String::from("graph dessin {\n");
    for (k, c) in black.iter().enumerate() {
        writeln!(
            s,
            "  b{} [shape=circle, style=filled, fillcolor=black, label=\"\", degree={}];",
            k + 1,
            c.len()
        )
        .unwrap();
    }
    for (k, c) in white.iter().enumerate() {
        writeln!(
            s,
            "  w{} [shape=circle, label=\"\", degree={}];",
            k + 1,
            c.len()
        )
        .unwrap();
    }
    for e in 0..t.degree() {
        writeln!(s, "  b{} -- w{} [label=\"{}\"];", bo[e], wo[e], e + 1).unwrap();
    }
    s.push_str("}\n");
    s
}
