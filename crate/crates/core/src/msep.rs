//! m-separation.
//!
//! The decision procedure replaces every bi-directed edge `u <-> v` by a
//! fresh latent parent `l -> u, l -> v` and runs a Bayes-ball reachability
//! over the resulting DAG; latents are never conditioned on. The path
//! enumerator [`m_separated_bruteforce`] applies the collider rules to every
//! simple path literally and serves as the reference.

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::graph::Admg;
use crate::set::VertexSet;

/// Default vertex cap for the path-enumerating oracle.
pub const BRUTEFORCE_CAP: usize = 10;

/// Is `x_set` m-separated from `y_set` given `z_set`?
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeparationQuery {
    pub x_set: VertexSet,
    pub y_set: VertexSet,
    pub z_set: VertexSet,
}

impl SeparationQuery {
    pub fn new(x_set: VertexSet, y_set: VertexSet, z_set: VertexSet) -> Self {
        Self {
            x_set,
            y_set,
            z_set,
        }
    }

    pub fn validate(&self, g: &Admg) -> Result<()> {
        if self.x_set.is_empty() || self.y_set.is_empty() {
            return Err(Error::InvalidInput(
                "separation query needs non-empty X and Y".into(),
            ));
        }
        if !self.x_set.is_disjoint(&self.y_set)
            || !self.x_set.is_disjoint(&self.z_set)
            || !self.y_set.is_disjoint(&self.z_set)
        {
            return Err(Error::InvalidInput(
                "separation query sets must be pairwise disjoint".into(),
            ));
        }
        let n = g.n();
        for s in [&self.x_set, &self.y_set, &self.z_set] {
            if let Some(v) = s.iter().find(|&v| v >= n) {
                return Err(Error::UnknownVertex(format!("#{v}")));
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Arrival {
    /// Reached from a child (or the start vertex).
    Up,
    /// Reached from a parent.
    Down,
}

/// Latent-augmented DAG: vertices `0..n` are observed, the rest latent.
struct Augmented {
    parents: Vec<Vec<usize>>,
    children: Vec<Vec<usize>>,
}

impl Augmented {
    fn new(g: &Admg) -> Self {
        let n = g.n();
        let total = n + g.bidirected_edges().len();
        let mut parents = vec![Vec::new(); total];
        let mut children = vec![Vec::new(); total];
        for &(t, h) in g.directed_edges() {
            parents[h].push(t);
            children[t].push(h);
        }
        for (i, &(a, b)) in g.bidirected_edges().iter().enumerate() {
            let l = n + i;
            children[l].extend([a, b]);
            parents[a].push(l);
            parents[b].push(l);
        }
        Self { parents, children }
    }
}

/// Decides whether `q.x_set` and `q.y_set` are m-separated given `q.z_set`.
pub fn m_separated(g: &Admg, q: &SeparationQuery) -> Result<bool> {
    q.validate(g)?;
    let aug = Augmented::new(g);
    let total = aug.parents.len();
    let mut in_z = vec![false; total];
    for z in &q.z_set {
        in_z[z] = true;
    }
    // Colliders are open when they are ancestors of Z; latents have
    // children, so they never are colliders, but mark them anyway.
    let mut an_z = in_z.clone();
    let mut stack: Vec<usize> = q.z_set.iter().collect();
    while let Some(v) = stack.pop() {
        for &p in &aug.parents[v] {
            if !an_z[p] {
                an_z[p] = true;
                stack.push(p);
            }
        }
    }

    let mut visited = vec![[false; 2]; total];
    let mut queue: VecDeque<(usize, Arrival)> = q.x_set.iter().map(|x| (x, Arrival::Up)).collect();
    while let Some((v, arrival)) = queue.pop_front() {
        let slot = arrival as usize;
        if visited[v][slot] {
            continue;
        }
        visited[v][slot] = true;
        if !in_z[v] && v < g.n() && q.y_set.contains(v) {
            return Ok(false);
        }
        match arrival {
            Arrival::Up if !in_z[v] => {
                queue.extend(aug.parents[v].iter().map(|&p| (p, Arrival::Up)));
                queue.extend(aug.children[v].iter().map(|&c| (c, Arrival::Down)));
            }
            Arrival::Up => {}
            Arrival::Down => {
                if !in_z[v] {
                    queue.extend(aug.children[v].iter().map(|&c| (c, Arrival::Down)));
                }
                if an_z[v] {
                    queue.extend(aug.parents[v].iter().map(|&p| (p, Arrival::Up)));
                }
            }
        }
    }
    Ok(true)
}

/// Edge as seen when walking a path: does an arrowhead point at the vertex
/// we arrive at, and at the vertex we leave from?
#[derive(Clone, Copy)]
struct Step {
    to: usize,
    head_at_from: bool,
    head_at_to: bool,
}

/// Enumerates every vertex-simple path between each `x` and `y` and checks
/// the collider conditions directly.
pub fn m_separated_bruteforce(g: &Admg, q: &SeparationQuery) -> Result<bool> {
    m_separated_bruteforce_capped(g, q, BRUTEFORCE_CAP)
}

pub fn m_separated_bruteforce_capped(g: &Admg, q: &SeparationQuery, cap: usize) -> Result<bool> {
    q.validate(g)?;
    if g.n() > cap {
        return Err(Error::Capacity {
            what: "graph size for path enumeration",
            actual: g.n(),
            limit: cap,
        });
    }
    let n = g.n();
    let mut steps: Vec<Vec<Step>> = vec![Vec::new(); n];
    for &(t, h) in g.directed_edges() {
        steps[t].push(Step {
            to: h,
            head_at_from: false,
            head_at_to: true,
        });
        steps[h].push(Step {
            to: t,
            head_at_from: true,
            head_at_to: false,
        });
    }
    for &(a, b) in g.bidirected_edges() {
        steps[a].push(Step {
            to: b,
            head_at_from: true,
            head_at_to: true,
        });
        steps[b].push(Step {
            to: a,
            head_at_from: true,
            head_at_to: true,
        });
    }
    // Ancestors of Z by naive fixpoint over the edge list.
    let mut an_z = vec![false; n];
    for z in &q.z_set {
        an_z[z] = true;
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &(t, h) in g.directed_edges() {
            if an_z[h] && !an_z[t] {
                an_z[t] = true;
                changed = true;
            }
        }
    }
    let ctx = Oracle {
        steps: &steps,
        in_z: (0..n).map(|v| q.z_set.contains(v)).collect(),
        an_z,
    };
    for x in &q.x_set {
        for y in &q.y_set {
            let mut on_path = vec![false; n];
            on_path[x] = true;
            if ctx.connects(x, y, None, &mut on_path) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

struct Oracle<'a> {
    steps: &'a [Vec<Step>],
    in_z: Vec<bool>,
    an_z: Vec<bool>,
}

impl Oracle<'_> {
    /// `incoming_head`: whether the edge we arrived at `v` by has an
    /// arrowhead at `v` (`None` at the start of the path).
    fn connects(
        &self,
        v: usize,
        y: usize,
        incoming_head: Option<bool>,
        on_path: &mut [bool],
    ) -> bool {
        for s in &self.steps[v] {
            if let Some(into_v) = incoming_head {
                let collider = into_v && s.head_at_from;
                let open = if collider {
                    self.an_z[v]
                } else {
                    !self.in_z[v]
                };
                if !open {
                    continue;
                }
            }
            if s.to == y {
                return true;
            }
            if on_path[s.to] {
                continue;
            }
            on_path[s.to] = true;
            let found = self.connects(s.to, y, Some(s.head_at_to), on_path);
            on_path[s.to] = false;
            if found {
                return true;
            }
        }
        false
    }
}
