//! Deterministic DOT rendering of Hasse diagrams: one node per element,
//! one edge per cover pair, elements of equal height on the same rank.

use posemigroup::Poset;

/// Longest-chain height of every element (minimals have height 0).
fn heights(p: &Poset) -> Vec<usize> {
    let n = p.n();
    let mut h = vec![0usize; n];
    // elements sorted by down-set size are processed bottom-up
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&x| (0..n).filter(|&y| p.leq(y, x)).count());
    for &x in &order {
        for y in 0..n {
            if p.lt(y, x) {
                h[x] = h[x].max(h[y] + 1);
            }
        }
    }
    h
}

/// Renders the Hasse diagram, drawn upward (`rankdir=BT`). `labels`, when
/// given, must have one entry per element.
pub fn hasse_dot(p: &Poset, labels: Option<&[String]>) -> String {
    let n = p.n();
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in 0..n {
        let label = match labels {
            Some(ls) => ls[x].clone(),
            None => x.to_string(),
        };
        out.push_str(&format!("  n{x} [label=\"{label}\"];\n"));
    }
    for (a, b) in p.covers() {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    let h = heights(p);
    let max_h = h.iter().copied().max().unwrap_or(0);
    for level in 0..=max_h {
        let members: Vec<String> =
            (0..n).filter(|&x| h[x] == level).map(|x| format!("n{x};")).collect();
        if n > 0 {
            out.push_str(&format!("  {{ rank=same; {} }}\n", members.join(" ")));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use posemigroup::fixtures;

    fn count(haystack: &str, needle: &str) -> usize {
        haystack.matches(needle).count()
    }

    #[test]
    fn two_chain_has_two_nodes_and_one_edge() {
        let dot = hasse_dot(&Poset::chain(2), None);
        assert_eq!(count(&dot, "[label="), 2);
        assert_eq!(count(&dot, "->"), 1);
    }

    #[test]
    fn crown_has_six_nodes_six_edges_two_ranks() {
        let dot = hasse_dot(&fixtures::named_poset("crown").unwrap(), None);
        assert_eq!(count(&dot, "[label="), 6);
        assert_eq!(count(&dot, "->"), 6);
        assert_eq!(count(&dot, "rank=same"), 2);
    }

    #[test]
    fn hummingbird_has_five_nodes_five_edges() {
        let dot = hasse_dot(&fixtures::named_poset("hummingbird").unwrap(), None);
        assert_eq!(count(&dot, "[label="), 5);
        assert_eq!(count(&dot, "->"), 5);
    }

    #[test]
    fn output_is_deterministic() {
        let p = fixtures::named_poset("tulip").unwrap();
        assert_eq!(hasse_dot(&p, None), hasse_dot(&p, None));
    }

    #[test]
    fn custom_labels_are_used() {
        let labels = vec!["a".to_string(), "b".to_string()];
        let dot = hasse_dot(&Poset::chain(2), Some(&labels));
        assert!(dot.contains("label=\"a\""));
        assert!(dot.contains("label=\"b\""));
    }
}
