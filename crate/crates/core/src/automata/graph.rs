//! Graph utilities shared by emptiness, trimming and lasso membership.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

/// Edge list per node; the flag marks edges that read a symbol.
pub(crate) type Adjacency = Vec<Vec<(usize, bool)>>;

const UNVISITED: usize = usize::MAX;

/// Tarjan's algorithm, iterative. Returns a component index per node
/// (`usize::MAX` for nodes not reachable from `roots`) and the component count.
pub(crate) fn scc(adj: &Adjacency, roots: impl IntoIterator<Item = usize>) -> (Vec<usize>, usize) {
    let n = adj.len();
    let mut index = vec![UNVISITED; n];
    let mut low = vec![0usize; n];
    let mut on_stack = vec![false; n];
    let mut comp = vec![UNVISITED; n];
    let mut stack = Vec::new();
    let mut call: Vec<(usize, usize)> = Vec::new();
    let mut next_index = 0;
    let mut comps = 0;

    for root in roots {
        if index[root] != UNVISITED {
            continue;
        }
        call.push((root, 0));
        index[root] = next_index;
        low[root] = next_index;
        next_index += 1;
        stack.push(root);
        on_stack[root] = true;

        while let Some(&mut (v, ref mut edge)) = call.last_mut() {
            if let Some(&(w, _)) = adj[v].get(*edge) {
                *edge += 1;
                if index[w] == UNVISITED {
                    index[w] = next_index;
                    low[w] = next_index;
                    next_index += 1;
                    stack.push(w);
                    on_stack[w] = true;
                    call.push((w, 0));
                } else if on_stack[w] {
                    low[v] = low[v].min(index[w]);
                }
                continue;
            }
            call.pop();
            if let Some(&(parent, _)) = call.last() {
                low[parent] = low[parent].min(low[v]);
            }
            if low[v] == index[v] {
                loop {
                    let w = stack.pop().expect("tarjan stack underflow");
                    on_stack[w] = false;
                    comp[w] = comps;
                    if w == v {
                        break;
                    }
                }
                comps += 1;
            }
        }
    }
    (comp, comps)
}

/// Components containing a node satisfying `accepting` and at least one
/// symbol-reading edge between two of their nodes.
pub(crate) fn good_components(
    adj: &Adjacency,
    comp: &[usize],
    comps: usize,
    accepting: impl Fn(usize) -> bool,
) -> Vec<bool> {
    let mut has_acc = vec![false; comps];
    let mut has_sym = vec![false; comps];
    for (v, edges) in adj.iter().enumerate() {
        let c = comp[v];
        if c == UNVISITED {
            continue;
        }
        if accepting(v) {
            has_acc[c] = true;
        }
        if edges
            .iter()
            .any(|&(w, consuming)| consuming && comp[w] == c)
        {
            has_sym[c] = true;
        }
    }
    has_acc
        .iter()
        .zip(&has_sym)
        .map(|(a, s)| *a && *s)
        .collect()
}

/// True iff some node reachable from `roots` lies on a cycle through an
/// accepting node that reads at least one symbol.
pub(crate) fn has_accepting_lasso(
    adj: &Adjacency,
    roots: impl IntoIterator<Item = usize>,
    accepting: impl Fn(usize) -> bool,
) -> bool {
    let (comp, comps) = scc(adj, roots);
    good_components(adj, &comp, comps, accepting)
        .into_iter()
        .any(|g| g)
}

/// Nodes reachable from `roots`.
pub(crate) fn forward_reach(adj: &Adjacency, roots: impl IntoIterator<Item = usize>) -> Vec<bool> {
    let mut seen = vec![false; adj.len()];
    let mut queue: VecDeque<usize> = VecDeque::new();
    for r in roots {
        if !seen[r] {
            seen[r] = true;
            queue.push_back(r);
        }
    }
    while let Some(v) = queue.pop_front() {
        for &(w, _) in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Nodes from which some node in `targets` is reachable.
pub(crate) fn backward_reach(adj: &Adjacency, targets: &[bool]) -> Vec<bool> {
    let mut rev: Adjacency = vec![Vec::new(); adj.len()];
    for (v, edges) in adj.iter().enumerate() {
        for &(w, c) in edges {
            rev[w].push((v, c));
        }
    }
    forward_reach(&rev, (0..adj.len()).filter(|&v| targets[v]))
}

/// Shortest path (as edge indices into `adj[v]`) from any root to a node
/// satisfying `goal`, restricted to nodes allowed by `within`.
pub(crate) fn bfs_path(
    adj: &Adjacency,
    roots: impl IntoIterator<Item = usize>,
    within: impl Fn(usize) -> bool,
    goal: impl Fn(usize) -> bool,
) -> Option<(usize, Vec<(usize, usize)>)> {
    let n = adj.len();
    let mut parent: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut seen = vec![false; n];
    let mut queue = VecDeque::new();
    for r in roots {
        if within(r) && !seen[r] {
            seen[r] = true;
            queue.push_back(r);
        }
    }
    while let Some(v) = queue.pop_front() {
        if goal(v) {
            let mut path = Vec::new();
            let mut cur = v;
            while let Some((p, e)) = parent[cur] {
                path.push((p, e));
                cur = p;
            }
            path.reverse();
            return Some((v, path));
        }
        for (e, &(w, _)) in adj[v].iter().enumerate() {
            if within(w) && !seen[w] {
                seen[w] = true;
                parent[w] = Some((v, e));
                queue.push_back(w);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn scc_splits_chain_and_cycle() {
        // 0 -> 1 <-> 2, 3 isolated
        let adj: Adjacency = vec![vec![(1, true)], vec![(2, true)], vec![(1, false)], vec![]];
        let (comp, comps) = scc(&adj, [0]);
        assert_eq!(comps, 2);
        assert_eq!(comp[1], comp[2]);
        assert_ne!(comp[0], comp[1]);
        assert_eq!(comp[3], usize::MAX);
    }

    #[test]
    fn epsilon_only_cycle_is_not_a_lasso() {
        let adj: Adjacency = vec![vec![(0, false)]];
        assert!(!has_accepting_lasso(&adj, [0], |_| true));
        let adj: Adjacency = vec![vec![(0, true)]];
        assert!(has_accepting_lasso(&adj, [0], |_| true));
    }

    #[test]
    fn deep_graph_does_not_overflow() {
        let n = 200_000;
        let adj: Adjacency = (0..n).map(|i| vec![((i + 1) % n, true)]).collect();
        let (_, comps) = scc(&adj, [0]);
        assert_eq!(comps, 1);
    }
}
