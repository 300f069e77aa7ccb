//! Closure of conditional independence statements under the semi-graphoid
//! axioms (symmetry, decomposition, weak union, contraction), optionally
//! with composition.
//!
//! Statements over a ground set of `n` vertices live in a universe of `4^n`
//! slots: each vertex is absent, in X, in Z or in Y, written as a base-4
//! word (0, 1, 2, 3). A statement and its X/Y swap share the numerically
//! smaller of their two words, which gives O(1) membership and exact
//! deduplication. The closure is a semi-naive fixpoint: every newly derived
//! statement gets all unary rules, and all binary rules against everything
//! derived so far.

use crate::error::{Error, Result};
use crate::set::VertexSet;
use crate::statement::CiStatement;

/// Default ground-set cap: `4^12` slots, a 2 MiB bit field.
pub const DEFAULT_CAP: usize = 12;
/// Largest cap accepted at all.
pub const MAX_CAP: usize = 14;

/// Which axioms the closure applies. The semi-graphoid axioms are always on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AxiomSet {
    pub composition: bool,
}

impl AxiomSet {
    pub const SEMIGRAPHOID: AxiomSet = AxiomSet { composition: false };
    pub const COMPOSITIONAL: AxiomSet = AxiomSet { composition: true };
}

/// The finite universe of statements over ground set `0..n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct StatementUniverse {
    n: usize,
}

impl StatementUniverse {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_cap(n, DEFAULT_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Result<Self> {
        let limit = cap.min(MAX_CAP);
        if n > limit {
            return Err(Error::Capacity {
                what: "statement universe ground set",
                actual: n,
                limit,
            });
        }
        Ok(Self { n })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn slots(&self) -> u64 {
        1u64 << (2 * self.n)
    }

    fn full(&self) -> u32 {
        ((1u64 << self.n) - 1) as u32
    }

    fn encode(&self, s: &CiStatement) -> Result<Triple> {
        let mut masks = [0u32; 3];
        for (m, side) in masks.iter_mut().zip([&s.x, &s.z, &s.y]) {
            for v in side {
                if v >= self.n {
                    return Err(Error::InvalidInput(format!(
                        "statement mentions vertex #{v} outside a ground set of {}",
                        self.n
                    )));
                }
                *m |= 1 << v;
            }
        }
        let [x, z, y] = masks;
        if x == 0 || y == 0 || x & y != 0 || x & z != 0 || y & z != 0 {
            return Err(Error::InvalidInput(
                "statement sides must be non-empty and pairwise disjoint".into(),
            ));
        }
        Ok(Triple { x, z, y })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Triple {
    x: u32,
    z: u32,
    y: u32,
}

/// Interleaves a zero bit after every bit of `m`: bit `v` moves to `2v`.
fn spread(m: u32) -> u64 {
    let mut x = m as u64;
    x = (x | (x << 16)) & 0x0000_FFFF_0000_FFFF;
    x = (x | (x << 8)) & 0x00FF_00FF_00FF_00FF;
    x = (x | (x << 4)) & 0x0F0F_0F0F_0F0F_0F0F;
    x = (x | (x << 2)) & 0x3333_3333_3333_3333;
    x = (x | (x << 1)) & 0x5555_5555_5555_5555;
    x
}

fn word(x: u32, z: u32, y: u32) -> u64 {
    spread(x) | (spread(z) << 1) | (spread(y) * 3)
}

fn slot(x: u32, z: u32, y: u32) -> u64 {
    word(x, z, y).min(word(y, z, x))
}

/// Non-empty proper subsets of `m`.
fn proper_subsets(m: u32) -> impl Iterator<Item = u32> {
    let mut sub = m;
    std::iter::from_fn(move || {
        sub = (sub.wrapping_sub(1)) & m;
        (sub != 0).then_some(sub)
    })
}

/// Non-empty subsets of `m`, including `m` itself.
fn subsets(m: u32) -> impl Iterator<Item = u32> {
    std::iter::once(m)
        .filter(|&m| m != 0)
        .chain(proper_subsets(m))
}

/// A set of statements closed (or not) under some axioms.
#[derive(Clone, Debug)]
pub struct StatementSet {
    universe: StatementUniverse,
    bits: Vec<u64>,
    items: Vec<Triple>,
    depth: Vec<u32>,
}

impl StatementSet {
    fn new(universe: StatementUniverse) -> Self {
        let words = (universe.slots() as usize).div_ceil(64);
        Self {
            universe,
            bits: vec![0; words],
            items: Vec::new(),
            depth: Vec::new(),
        }
    }

    fn has(&self, x: u32, z: u32, y: u32) -> bool {
        let s = slot(x, z, y);
        self.bits[(s >> 6) as usize] >> (s & 63) & 1 == 1
    }

    fn insert(&mut self, t: Triple, depth: u32) -> Option<u64> {
        let s = slot(t.x, t.z, t.y);
        let (w, b) = ((s >> 6) as usize, s & 63);
        if self.bits[w] >> b & 1 == 1 {
            return None;
        }
        self.bits[w] |= 1 << b;
        let canon = if word(t.x, t.z, t.y) <= word(t.y, t.z, t.x) {
            t
        } else {
            Triple {
                x: t.y,
                z: t.z,
                y: t.x,
            }
        };
        self.items.push(canon);
        self.depth.push(depth);
        Some(s)
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn universe(&self) -> StatementUniverse {
        self.universe
    }

    /// Membership; statements outside the universe are never members.
    pub fn contains(&self, s: &CiStatement) -> bool {
        self.universe
            .encode(s)
            .map(|t| self.has(t.x, t.z, t.y))
            .unwrap_or(false)
    }

    /// Length of the longest rule chain used to derive `s` in this run
    /// (0 for seed statements).
    pub fn depth(&self, s: &CiStatement) -> Option<u32> {
        let t = self.universe.encode(s).ok()?;
        let target = slot(t.x, t.z, t.y);
        self.items
            .iter()
            .position(|i| slot(i.x, i.z, i.y) == target)
            .map(|i| self.depth[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = CiStatement> + '_ {
        self.items.iter().map(|t| CiStatement {
            x: VertexSet::from_mask(t.x as u64),
            z: VertexSet::from_mask(t.z as u64),
            y: VertexSet::from_mask(t.y as u64),
        })
    }

    /// Members in canonical sorted order.
    pub fn to_sorted_vec(&self) -> Vec<CiStatement> {
        let mut v: Vec<_> = self.iter().collect();
        v.sort();
        v
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
struct Rules {
    decomposition: bool,
    weak_union: bool,
    contraction: bool,
    composition: bool,
}

impl Rules {
    fn all(axioms: AxiomSet) -> Self {
        Rules {
            decomposition: true,
            weak_union: true,
            contraction: true,
            composition: axioms.composition,
        }
    }

    const NONE: Rules = Rules {
        decomposition: false,
        weak_union: false,
        contraction: false,
        composition: false,
    };
}

/// Rule application order used to reach the fixpoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Schedule {
    /// Every new statement meets all rules at once (semi-naive).
    #[default]
    Worklist,
    /// One rule at a time over the whole set, round after round.
    RoundRobin,
}

struct Engine {
    full: u32,
    set: StatementSet,
    target: Option<u64>,
    buf: Vec<(Triple, u32)>,
}

impl Engine {
    fn reached(&self) -> bool {
        self.target
            .is_some_and(|t| self.set.bits[(t >> 6) as usize] >> (t & 63) & 1 == 1)
    }

    fn derive(&mut self, i: usize, rules: Rules) {
        let s = self.set.items[i];
        let d = self.set.depth[i] + 1;
        let set = &self.set;
        let out = &mut self.buf;
        for (x, z, y) in [(s.x, s.z, s.y), (s.y, s.z, s.x)] {
            let rest = self.full & !(x | z | y);
            for sub in proper_subsets(y) {
                if rules.decomposition {
                    out.push((Triple { x, z, y: sub }, d));
                }
                if rules.weak_union {
                    out.push((
                        Triple {
                            x,
                            z: z | sub,
                            y: y & !sub,
                        },
                        d,
                    ));
                }
            }
            if rules.contraction {
                // s = I(x, z, y) with I(x, z ∪ y, w)
                for w in subsets(rest) {
                    if set.has(x, z | y, w) {
                        out.push((Triple { x, z, y: y | w }, d));
                    }
                }
                // s = I(x, z' ∪ y2, y) with I(x, z', y2)
                for y2 in subsets(z) {
                    if set.has(x, z & !y2, y2) {
                        out.push((
                            Triple {
                                x,
                                z: z & !y2,
                                y: y | y2,
                            },
                            d,
                        ));
                    }
                }
            }
            if rules.composition {
                for w in subsets(rest) {
                    if set.has(x, z, w) {
                        out.push((Triple { x, z, y: y | w }, d));
                    }
                }
            }
        }
    }

    /// Inserts buffered derivations; returns whether anything was new.
    fn flush(&mut self) -> bool {
        let mut grew = false;
        for (t, d) in std::mem::take(&mut self.buf) {
            grew |= self.set.insert(t, d).is_some();
        }
        grew
    }

    fn run(&mut self, schedule: Schedule, axioms: AxiomSet) {
        match schedule {
            Schedule::Worklist => {
                let rules = Rules::all(axioms);
                let mut next = 0;
                while next < self.set.items.len() && !self.reached() {
                    self.derive(next, rules);
                    self.flush();
                    next += 1;
                }
            }
            Schedule::RoundRobin => {
                let mut singles = vec![
                    Rules {
                        decomposition: true,
                        ..Rules::NONE
                    },
                    Rules {
                        weak_union: true,
                        ..Rules::NONE
                    },
                    Rules {
                        contraction: true,
                        ..Rules::NONE
                    },
                ];
                if axioms.composition {
                    singles.push(Rules {
                        composition: true,
                        ..Rules::NONE
                    });
                }
                loop {
                    let mut grew = false;
                    for &rule in &singles {
                        let len = self.set.items.len();
                        for i in 0..len {
                            self.derive(i, rule);
                            grew |= self.flush();
                        }
                    }
                    if !grew || self.reached() {
                        break;
                    }
                }
            }
        }
    }
}

fn seeded(
    universe: StatementUniverse,
    seed: &[CiStatement],
    target: Option<&CiStatement>,
) -> Result<Engine> {
    let mut set = StatementSet::new(universe);
    for s in seed {
        set.insert(universe.encode(s)?, 0);
    }
    let target = match target {
        Some(t) => {
            let t = universe.encode(t)?;
            Some(slot(t.x, t.z, t.y))
        }
        None => None,
    };
    Ok(Engine {
        full: universe.full(),
        set,
        target,
        buf: Vec::new(),
    })
}

/// Least set containing `seed` and closed under `axioms`.
pub fn closure(
    universe: StatementUniverse,
    seed: &[CiStatement],
    axioms: AxiomSet,
) -> Result<StatementSet> {
    closure_with_schedule(universe, seed, axioms, Schedule::Worklist)
}

pub fn closure_with_schedule(
    universe: StatementUniverse,
    seed: &[CiStatement],
    axioms: AxiomSet,
    schedule: Schedule,
) -> Result<StatementSet> {
    let mut engine = seeded(universe, seed, None)?;
    engine.run(schedule, axioms);
    Ok(engine.set)
}

/// Is `target` derivable from `seed`? Stops as soon as it is derived.
pub fn implies(
    universe: StatementUniverse,
    seed: &[CiStatement],
    target: &CiStatement,
    axioms: AxiomSet,
) -> Result<bool> {
    let mut engine = seeded(universe, seed, Some(target))?;
    if engine.reached() {
        return Ok(true);
    }
    engine.run(Schedule::Worklist, axioms);
    Ok(engine.reached())
}
