//! Hasse diagram as a Graphviz `digraph`.
//!
//! Nodes are `n<index>`, grouped into `rank=same` subgraphs by rank, edges
//! point from lower to upper cover and `rankdir=BT` draws minimal elements
//! at the bottom. Output depends only on element order, so it is stable.

use std::fmt::Write;

use super::Poset;

pub(super) fn render(p: &Poset) -> String {
    let mut out = String::new();
    out.push_str("digraph hasse {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box, fontsize=10];\n");
    let height = p.ranks().iter().copied().max();
    for r in 0..=height.unwrap_or(0) {
        let members: Vec<usize> = (0..p.len()).filter(|&x| p.rank(x) == r).collect();
        if members.is_empty() {
            continue;
        }
        writeln!(out, "  {{ rank=same;").unwrap();
        for x in members {
            writeln!(
                out,
                "    n{x} [label=\"{}\"];",
                escape(&p.tag(x).to_string())
            )
            .unwrap();
        }
        out.push_str("  }\n");
    }
    for (lo, hi) in p.cover_pairs() {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

#[cfg(test)]
mod tests {
    use super::super::tests::named;
    use super::*;

    #[test]
    fn chain_and_antichain() {
        let chain = Poset::from_covers(named(2), [(0, 1)]).unwrap().to_dot();
        assert_eq!(chain.matches("[label=").count(), 2);
        assert_eq!(chain.matches("->").count(), 1);
        assert!(chain.contains("n0 -> n1;"));

        let anti = Poset::from_covers(named(3), []).unwrap().to_dot();
        assert_eq!(anti.matches("[label=").count(), 3);
        assert_eq!(anti.matches("->").count(), 0);
        assert_eq!(anti.matches("rank=same").count(), 1);
    }

    #[test]
    fn labels_are_escaped() {
        assert_eq!(escape("a\"b"), "a\\\"b");
    }
}
