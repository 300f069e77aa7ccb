//! Mixed directed path search over plain adjacency lists.
//!
//! Shared by [`Admg`](crate::Admg) and by the contracted graphs built while
//! constructing orderings, whose vertices are blocks of original vertices.

use std::collections::VecDeque;

/// Out-neighbours along `->` and neighbours along `<->` for each vertex.
#[derive(Clone, Debug, Default)]
pub(crate) struct MixedAdjacency {
    pub directed: Vec<Vec<usize>>,
    pub bidirected: Vec<Vec<usize>>,
}

impl MixedAdjacency {
    fn n(&self) -> usize {
        self.directed.len()
    }

    fn moves(&self, v: usize) -> impl Iterator<Item = (usize, bool)> + '_ {
        self.directed[v]
            .iter()
            .map(|&w| (w, true))
            .chain(self.bidirected[v].iter().map(|&w| (w, false)))
    }

    /// Walk reachability from `start` (with `used` recording whether a `->`
    /// was already taken) to `beta` over a walk containing a `->`, avoiding
    /// `blocked` vertices in its interior.
    fn walk_reaches(&self, start: usize, used: bool, beta: usize, blocked: &[bool]) -> bool {
        let n = self.n();
        let mut seen = vec![[false; 2]; n];
        let mut queue = VecDeque::from([(start, used)]);
        seen[start][used as usize] = true;
        while let Some((v, used)) = queue.pop_front() {
            for (w, dir) in self.moves(v) {
                let u = used || dir;
                if w == beta {
                    if u {
                        return true;
                    }
                    continue;
                }
                if blocked[w] || seen[w][u as usize] {
                    continue;
                }
                seen[w][u as usize] = true;
                queue.push_back((w, u));
            }
        }
        false
    }

    /// Exact test for a vertex-simple mixed directed path from `alpha` to `beta`.
    ///
    /// A linear-time walk search gives a necessary condition; when it
    /// succeeds, a pruned depth-first search over simple paths settles the
    /// question, since a walk may only reach `beta` through a revisit.
    pub fn has_mixed_directed_path(&self, alpha: usize, beta: usize) -> bool {
        if alpha == beta {
            return false;
        }
        let mut blocked = vec![false; self.n()];
        blocked[alpha] = true;
        if !self.walk_reaches(alpha, false, beta, &blocked) {
            return false;
        }
        self.dfs(alpha, false, beta, &mut blocked)
    }

    fn dfs(&self, v: usize, used: bool, beta: usize, visited: &mut Vec<bool>) -> bool {
        for (w, dir) in self.moves(v) {
            let u = used || dir;
            if w == beta {
                if u {
                    return true;
                }
                continue;
            }
            if visited[w] {
                continue;
            }
            visited[w] = true;
            let found = self.walk_reaches(w, u, beta, visited) && self.dfs(w, u, beta, visited);
            visited[w] = false;
            if found {
                return true;
            }
        }
        false
    }
}
