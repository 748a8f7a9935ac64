//! Graphviz output for sets of permutations ordered by the left weak order.

use std::fmt::Write;

use crate::cells::CellPartition;
use crate::perm::ElementSet;

/// Number of colors in the `set312` Brewer scheme.
const PALETTE: usize = 12;

/// Renders `x` as a DOT digraph: one vertex per element, filled by cell id,
/// and one edge `s_i w -> w` for every left-weak cover inside `x`.
pub fn weak_order_dot(name: &str, x: &ElementSet, cp: &CellPartition) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", escape(name));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(
        out,
        "  node [shape=box, style=filled, colorscheme=set312, fontname=\"monospace\"];"
    );
    for w in x {
        let id = cp.cell_id(w);
        let _ = writeln!(
            out,
            "  \"{w}\" [fillcolor={}, tooltip=\"cell {id}\"];",
            id % PALETTE + 1
        );
    }
    for w in x {
        for i in w.left_descents().iter() {
            let v = w.left_mul_simple(i);
            if x.contains(&v) {
                let _ = writeln!(out, "  \"{v}\" -> \"{w}\" [label=\"s{i}\"];");
            }
        }
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cells::approx_cells;
    use crate::perm::{enumerate_group, RankCap};

    #[test]
    fn sym3_graph() {
        let cp = approx_cells(3, RankCap::default()).unwrap();
        let all = enumerate_group(3, RankCap::default()).unwrap();
        let dot = weak_order_dot("W3", &all, &cp);
        assert!(dot.starts_with("digraph \"W3\" {"));
        assert_eq!(dot.matches(" -> ").count(), 6);
        assert_eq!(dot.matches("fillcolor=").count(), 6);
        assert!(dot.contains("\"1,2,3\" -> \"2,1,3\" [label=\"s1\"];"));
    }
}
