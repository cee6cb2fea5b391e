//! Brute-force reference implementations that only read adjacency. They
//! share no code with the library beyond `Graph::has_edge`.

#![allow(dead_code)]

use std::collections::HashMap;

use prismatic_core::Graph;

pub fn triangles(g: &Graph) -> Vec<[usize; 3]> {
    let n = g.n();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in b + 1..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

pub fn is_prismatic(g: &Graph) -> bool {
    triangles(g).iter().all(|t| {
        (0..g.n())
            .filter(|v| !t.contains(v))
            .all(|v| t.iter().filter(|&&x| g.has_edge(v, x)).count() == 1)
    })
}

fn combinations(n: usize, k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        for v in start..n {
            if n - v < k - cur.len() {
                break;
            }
            cur.push(v);
            if rec(v + 1, n, k, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::new(), f)
}

/// Minimum triangle hitting set size by scanning subsets of growing size.
pub fn lambda(g: &Graph) -> usize {
    let ts = triangles(g);
    for k in 0..=g.n() {
        let found = combinations(g.n(), k, &mut |s| ts.iter().all(|t| t.iter().any(|v| s.contains(v))));
        if found {
            return k;
        }
    }
    unreachable!("the whole vertex set hits every triangle")
}

pub fn has_two_disjoint_triangles(g: &Graph) -> bool {
    let ts = triangles(g);
    ts.iter()
        .enumerate()
        .any(|(i, a)| ts[i + 1..].iter().any(|b| a.iter().all(|v| !b.contains(v))))
}

/// Contains an induced four-cycle plus two isolated vertices.
pub fn has_cobridge(g: &Graph) -> bool {
    combinations(g.n(), 6, &mut |s| {
        let deg: Vec<usize> = s
            .iter()
            .map(|&u| s.iter().filter(|&&v| g.has_edge(u, v)).count())
            .collect();
        let edges: usize = deg.iter().sum::<usize>() / 2;
        edges == 4 && deg.iter().filter(|&&d| d == 0).count() == 2 && deg.iter().filter(|&&d| d == 2).count() == 4
    })
}

fn adjacency_masks(g: &Graph) -> Vec<u32> {
    assert!(g.n() <= 30, "bitmask oracles take at most 30 vertices");
    (0..g.n())
        .map(|u| (0..g.n()).filter(|&v| g.has_edge(u, v)).fold(0u32, |m, v| m | 1 << v))
        .collect()
}

/// Maximum matching size by memoised recursion over vertex subsets.
pub fn matching_size(g: &Graph) -> usize {
    fn go(mask: u32, adj: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let v = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << v);
        let mut best = go(rest, adj, memo);
        let mut cand = adj[v] & rest;
        while cand != 0 {
            let u = cand.trailing_zeros();
            cand &= cand - 1;
            best = best.max(1 + go(rest & !(1 << u), adj, memo));
        }
        memo.insert(mask, best);
        best
    }
    let adj = adjacency_masks(g);
    go(((1u64 << g.n()) - 1) as u32, &adj, &mut HashMap::new())
}

/// Minimum number of cliques partitioning the vertex set, by dynamic
/// programming over subsets: the lowest remaining vertex goes into some
/// clique of remaining vertices.
pub fn clique_cover_size(g: &Graph) -> usize {
    fn cliques_with(v: usize, within: u32, adj: &[u32]) -> Vec<u32> {
        let mut out = Vec::new();
        let mut stack = vec![(1u32 << v, adj[v] & within)];
        while let Some((clique, cand)) = stack.pop() {
            out.push(clique);
            let mut c = cand;
            while c != 0 {
                let u = c.trailing_zeros();
                c &= c - 1;
                // Extend only by larger vertices to list each clique once.
                stack.push((clique | 1 << u, cand & adj[u as usize] & !((2u32 << u) - 1)));
            }
        }
        out
    }
    fn go(mask: u32, adj: &[u32], memo: &mut HashMap<u32, usize>) -> usize {
        if mask == 0 {
            return 0;
        }
        if let Some(&r) = memo.get(&mask) {
            return r;
        }
        let v = mask.trailing_zeros() as usize;
        let best = cliques_with(v, mask & !(1 << v), adj)
            .into_iter()
            .map(|c| 1 + go(mask & !c, adj, memo))
            .min()
            .expect("the singleton is a clique");
        memo.insert(mask, best);
        best
    }
    let adj = adjacency_masks(g);
    go(((1u64 << g.n()) - 1) as u32, &adj, &mut HashMap::new())
}
