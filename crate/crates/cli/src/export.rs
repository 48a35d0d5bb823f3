//! Graphviz rendering of a memory. Solid arrows are the crisp subsumptions
//! left after transitive reduction; dashed arrows are fractional ones.

use std::fmt::Write;

use scenemem_core::{Degree, MemoryGraph};

pub fn to_dot(memory: &MemoryGraph) -> String {
    let mut out = String::from("digraph memory {\n  rankdir=BT;\n  node [shape=box];\n");
    for c in memory.categories() {
        let label = if c.is_root() {
            "Φ (root)".to_string()
        } else {
            let mut label = format!("{}\\nq={:.3}", c.id(), c.score());
            for (rr, r) in c.restrictions() {
                let _ = write!(label, "\\n{rr} ≥ {:.3} (a={})", r.k(), r.fuzziness());
            }
            label
        };
        let _ = writeln!(out, "  n{} [label=\"{}\"];", c.id().0, escape(&label));
    }
    for (c, p) in memory.crisp_reduction() {
        let _ = writeln!(out, "  n{} -> n{};", c.0, p.0);
    }
    for (&(c, p), &w) in memory.edges() {
        if w != Degree::ONE {
            let _ = writeln!(
                out,
                "  n{} -> n{} [style=dashed, label=\"{:.3}\"];",
                c.0,
                p.0,
                w.value()
            );
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('"', "\\\"")
}
