//! Brute-force ground truth: vertex enumeration, skeleton adjacency, and exact
//! edge and circuit distances by breadth-first search.
//!
//! Everything here is exponential in the instance size and meant for small
//! instances where the answers are used to check the walk builders.

use std::collections::{HashMap, VecDeque};
use std::hash::Hash;

use rayon::prelude::*;

use crate::circuits::{enumerate_partitions, min_slack, PartitionCircuit, Sign};
use crate::error::{Error, Result};
use crate::polyhedron::{Point, Polyhedron, TightEdgeSet};
use crate::scalar::Scalar;
use crate::trees::SpanningTree;
use crate::walk::{Walk, WalkMode};
use crate::Rational;

pub const DEFAULT_TREE_CAP: usize = 1_000_000;
pub const DEFAULT_STATE_CAP: usize = 1_000_000;

/// Resource caps for the brute-force searches.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub tree_cap: usize,
    pub state_cap: usize,
    /// Circuit BFS depth; `None` means `|V|(|V|-1)/2`.
    pub depth_cap: Option<usize>,
}

impl Default for Limits {
    fn default() -> Self {
        Limits { tree_cap: DEFAULT_TREE_CAP, state_cap: DEFAULT_STATE_CAP, depth_cap: None }
    }
}

impl Limits {
    pub fn depth_for(&self, node_count: usize) -> usize {
        self.depth_cap.unwrap_or(node_count * node_count.saturating_sub(1) / 2)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VertexSet<T = Rational> {
    pub vertices: Vec<Point<T>>,
    /// `tree_witnesses[i]` lists every spanning tree determining `vertices[i]`.
    pub tree_witnesses: Vec<Vec<SpanningTree>>,
}

impl<T: Scalar> VertexSet<T> {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, u: &Point<T>) -> Option<usize> {
        self.vertices.iter().position(|v| v == u)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceResult<T = Rational> {
    pub length: usize,
    pub walk: Walk<T>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diameter<T = Rational> {
    pub value: usize,
    /// A pair attaining the diameter (`None` only when there are no vertices).
    pub witness: Option<(Point<T>, Point<T>)>,
}

/// A destination of one maximal circuit step with every `(S, sign)` pair
/// leading to it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CircuitNeighbor<T = Rational> {
    pub destination: Point<T>,
    pub producers: Vec<(PartitionCircuit, Sign)>,
}

impl<T: Scalar> Polyhedron<T> {
    pub fn enumerate_vertices(&self, tree_cap: usize) -> Result<VertexSet<T>> {
        let (vertices, tree_witnesses) = self.vertices_with_trees(tree_cap)?.into_iter().unzip();
        Ok(VertexSet { vertices, tree_witnesses })
    }

    /// Two distinct vertices are adjacent iff their common tight edges leave
    /// exactly two connected components.
    pub fn are_adjacent(&self, u: &Point<T>, v: &Point<T>) -> Result<bool> {
        if !self.is_vertex(u)? || !self.is_vertex(v)? {
            return Err(Error::NotAVertex);
        }
        if u == v {
            return Err(Error::IdenticalPoints);
        }
        let shared = self.tight_unchecked(u).intersection(&self.tight_unchecked(v));
        Ok(self.components_of(&shared) == 2)
    }

    /// Every applicable maximal circuit step from `u`, grouped by destination
    /// in order of first production.
    pub fn first_circuit_neighbors(&self, u: &Point<T>) -> Result<Vec<CircuitNeighbor<T>>> {
        let partitions = enumerate_partitions(self.graph());
        let mut out: Vec<CircuitNeighbor<T>> = Vec::new();
        let mut index: HashMap<Point<T>, usize> = HashMap::new();
        for (step, dest) in self.circuit_steps_from(u, &partitions)? {
            match index.get(&dest) {
                Some(&k) => out[k].producers.push((step.circuit, step.sign)),
                None => {
                    index.insert(dest.clone(), out.len());
                    out.push(CircuitNeighbor { destination: dest, producers: vec![(step.circuit, step.sign)] });
                }
            }
        }
        Ok(out)
    }

    pub fn combinatorial_distance(&self, u: &Point<T>, v: &Point<T>, limits: &Limits) -> Result<DistanceResult<T>> {
        if !self.is_vertex(u)? || !self.is_vertex(v)? {
            return Err(Error::NotAVertex);
        }
        if u == v {
            return Ok(DistanceResult { length: 0, walk: Walk::trivial(WalkMode::Edge, u.clone()) });
        }
        let skeleton = Skeleton::build(self, limits.tree_cap)?;
        skeleton.distance(u, v)
    }

    pub fn circuit_distance(&self, u: &Point<T>, v: &Point<T>, limits: &Limits) -> Result<DistanceResult<T>> {
        if !self.is_vertex(u)? || !self.is_vertex(v)? {
            return Err(Error::NotAVertex);
        }
        let search = CircuitSearch::new(self);
        search.distance(u, v, limits)
    }

    /// Largest distance over vertex pairs; ordered pairs in circuit mode.
    pub fn diameter(&self, mode: WalkMode, limits: &Limits) -> Result<Diameter<T>> {
        match mode {
            WalkMode::Edge => Skeleton::build(self, limits.tree_cap)?.diameter(),
            WalkMode::Circuit => {
                let vertices = self.enumerate_vertices(limits.tree_cap)?.vertices;
                CircuitSearch::new(self).diameter(&vertices, limits)
            }
        }
    }
}

/// The 1-skeleton: vertices and edge adjacency.
#[derive(Debug, Clone)]
pub struct Skeleton<'p, T = Rational> {
    poly: &'p Polyhedron<T>,
    pub vertices: VertexSet<T>,
    pub adjacency: Vec<Vec<usize>>,
}

impl<'p, T: Scalar> Skeleton<'p, T> {
    pub fn build(poly: &'p Polyhedron<T>, tree_cap: usize) -> Result<Self> {
        let vertices = poly.enumerate_vertices(tree_cap)?;
        let tight: Vec<TightEdgeSet> = vertices.vertices.iter().map(|u| poly.tight_unchecked(u)).collect();
        let k = vertices.len();
        let mut adjacency = vec![Vec::new(); k];
        for i in 0..k {
            for j in i + 1..k {
                if poly.components_of(&tight[i].intersection(&tight[j])) == 2 {
                    adjacency[i].push(j);
                    adjacency[j].push(i);
                }
            }
        }
        Ok(Skeleton { poly, vertices, adjacency })
    }

    pub fn polyhedron(&self) -> &'p Polyhedron<T> {
        self.poly
    }

    /// BFS distances and parents from vertex `source`.
    pub fn bfs(&self, source: usize) -> (Vec<Option<usize>>, Vec<Option<usize>>) {
        let k = self.vertices.len();
        let mut dist = vec![None; k];
        let mut parent = vec![None; k];
        dist[source] = Some(0);
        let mut queue = VecDeque::from([source]);
        while let Some(a) = queue.pop_front() {
            let d = dist[a].expect("queued vertices have a distance");
            for &b in &self.adjacency[a] {
                if dist[b].is_none() {
                    dist[b] = Some(d + 1);
                    parent[b] = Some(a);
                    queue.push_back(b);
                }
            }
        }
        (dist, parent)
    }

    pub fn distance(&self, u: &Point<T>, v: &Point<T>) -> Result<DistanceResult<T>> {
        let s = self.vertices.position(u).ok_or(Error::NotAVertex)?;
        let t = self.vertices.position(v).ok_or(Error::NotAVertex)?;
        let (dist, parent) = self.bfs(s);
        let length = dist[t].expect("the skeleton of a polyhedron is connected");
        let mut chain = vec![t];
        while let Some(p) = parent[*chain.last().unwrap()] {
            chain.push(p);
        }
        chain.reverse();
        let points = chain.into_iter().map(|i| self.vertices.vertices[i].clone()).collect();
        let walk = Walk::from_points(self.poly, WalkMode::Edge, points)?;
        Ok(DistanceResult { length, walk })
    }

    pub fn diameter(&self) -> Result<Diameter<T>> {
        let k = self.vertices.len();
        let best = (0..k)
            .into_par_iter()
            .map(|s| {
                let (dist, _) = self.bfs(s);
                dist.iter()
                    .enumerate()
                    .map(|(t, d)| (d.expect("the skeleton of a polyhedron is connected"), s, t))
                    .max_by_key(|&(d, _, _)| d)
                    .expect("source reaches itself")
            })
            .reduce_with(|a, b| if b.0 > a.0 || (b.0 == a.0 && (b.1, b.2) < (a.1, a.2)) { b } else { a });
        Ok(match best {
            None => Diameter { value: 0, witness: None },
            Some((value, s, t)) => Diameter {
                value,
                witness: Some((self.vertices.vertices[s].clone(), self.vertices.vertices[t].clone())),
            },
        })
    }
}

/// BFS over points where each move is a maximal circuit step.
///
/// When the costs share a small common denominator the search runs on the
/// scaled integer lattice, where every reachable point has integer
/// coordinates; otherwise it runs on exact points directly. The deepest level
/// of a search is never materialized: whether a frontier point reaches a
/// target in one maximal step is decided from the difference of the two.
pub struct CircuitSearch<'p, T = Rational> {
    poly: &'p Polyhedron<T>,
    partitions: Vec<PartitionCircuit>,
    /// Blocking edges per partition: `(R -> S, S -> R)`.
    cuts: Vec<(Vec<usize>, Vec<usize>)>,
    /// Bit mask of `S` to partition index.
    by_mask: HashMap<u64, usize>,
    lattice: Option<Lattice>,
}

/// One representation of the points a circuit search moves between.
trait Moves: Sync {
    type State: Clone + Eq + Hash + Send + Sync;

    fn successors(&self, u: &Self::State) -> Vec<Self::State>;

    /// Positions in `targets` reached from `u` by one maximal step.
    fn hits(&self, u: &Self::State, targets: &[&Self::State]) -> Vec<usize>;
}

/// Whether `t - u` is `delta` times the indicator of a partition, returning
/// the partition and `delta`.
fn uniform_shift<'a, X>(u: &'a [X], t: &'a [X], by_mask: &HashMap<u64, usize>, sub: impl Fn(&X, &X) -> X) -> Option<(usize, X)>
where
    X: PartialEq,
{
    let mut delta: Option<X> = None;
    let mut mask = 0u64;
    for (i, (a, b)) in u.iter().zip(t).enumerate() {
        if a == b {
            continue;
        }
        let d = sub(b, a);
        match &delta {
            None => delta = Some(d),
            Some(x) if *x == d => {}
            Some(_) => return None,
        }
        mask |= 1 << i;
    }
    Some((*by_mask.get(&mask)?, delta?))
}

impl<T: Scalar> Moves for CircuitSearch<'_, T> {
    type State = Point<T>;

    fn successors(&self, u: &Point<T>) -> Vec<Point<T>> {
        self.steps(u).into_iter().map(|(k, sign, eps)| self.step_to(u, k, sign, &eps)).collect()
    }

    fn hits(&self, u: &Point<T>, targets: &[&Point<T>]) -> Vec<usize> {
        let slacks = self.poly.slacks(u);
        let mut out = Vec::new();
        for (j, t) in targets.iter().enumerate() {
            let Some((k, delta)) = uniform_shift(u.coords(), t.coords(), &self.by_mask, |b, a| b.clone() - a.clone()) else {
                continue;
            };
            let sign = if delta.is_positive() { Sign::Plus } else { Sign::Minus };
            if min_slack(&slacks, self.cut(k, sign).iter().copied()).is_some_and(|(eps, _)| eps == delta.abs()) {
                out.push(j);
            }
        }
        out
    }
}

/// The polyhedron scaled by the common denominator of its costs.
struct Lattice {
    scale: i64,
    ends: Vec<(usize, usize)>,
    costs: Vec<i64>,
    members: Vec<Vec<usize>>,
    cuts: Vec<(Vec<usize>, Vec<usize>)>,
    by_mask: HashMap<u64, usize>,
}

/// Bound on scaled magnitudes, far enough below `i64::MAX` that sums of a
/// few thousand of them cannot overflow.
const LATTICE_BOUND: i128 = 1 << 48;

impl Lattice {
    fn new<T: Scalar>(poly: &Polyhedron<T>, partitions: &[PartitionCircuit], cuts: &[(Vec<usize>, Vec<usize>)]) -> Option<Self> {
        use num_integer::Integer;
        let fractions = poly.costs().iter().map(Scalar::small_fraction).collect::<Option<Vec<_>>>()?;
        let mut scale: i128 = 1;
        for &(_, d) in &fractions {
            scale = scale.lcm(&d);
            if scale > 1 << 31 {
                return None;
            }
        }
        let budget = LATTICE_BOUND / (poly.edge_count() as i128 + 1);
        let costs = fractions
            .iter()
            .map(|&(n, d)| {
                let c = n * (scale / d);
                (c.abs() <= budget).then_some(c as i64)
            })
            .collect::<Option<Vec<_>>>()?;
        Some(Lattice {
            scale: scale as i64,
            ends: poly.graph().edges().iter().map(|e| (e.tail.index(), e.head.index())).collect(),
            costs,
            members: partitions.iter().map(|p| p.members().to_vec()).collect(),
            cuts: cuts.to_vec(),
            by_mask: partitions.iter().enumerate().map(|(k, p)| (mask_of(p), k)).collect(),
        })
    }

    fn embed<T: Scalar>(&self, p: &Point<T>) -> Option<Vec<i64>> {
        p.coords()
            .iter()
            .map(|x| {
                let (n, d) = x.small_fraction()?;
                let scale = self.scale as i128;
                if scale % d != 0 {
                    return None;
                }
                let v = n.checked_mul(scale / d)?;
                (v.abs() <= LATTICE_BOUND).then_some(v as i64)
            })
            .collect()
    }

    fn point<T: Scalar>(&self, u: &[i64]) -> Point<T> {
        Point::anchored(u.iter().map(|&x| T::from_fraction(x, self.scale)).collect())
    }

    fn slacks(&self, u: &[i64]) -> Vec<i64> {
        self.ends.iter().zip(&self.costs).map(|(&(t, h), c)| c + u[t] - u[h]).collect()
    }

    fn cut(&self, k: usize, sign: Sign) -> &[usize] {
        match sign {
            Sign::Plus => &self.cuts[k].0,
            Sign::Minus => &self.cuts[k].1,
        }
    }

    fn blocking(&self, slacks: &[i64], k: usize, sign: Sign) -> Option<i64> {
        self.cut(k, sign).iter().map(|&e| slacks[e]).min()
    }
}

fn mask_of(p: &PartitionCircuit) -> u64 {
    p.members().iter().fold(0u64, |m, &v| m | 1 << v)
}

impl Moves for Lattice {
    type State = Vec<i64>;

    fn successors(&self, u: &Vec<i64>) -> Vec<Vec<i64>> {
        let slacks = self.slacks(u);
        let mut out = Vec::new();
        for (k, members) in self.members.iter().enumerate() {
            for sign in Sign::BOTH {
                let Some(eps) = self.blocking(&slacks, k, sign).filter(|&e| e > 0) else { continue };
                let shift = match sign {
                    Sign::Plus => eps,
                    Sign::Minus => -eps,
                };
                let mut v = u.clone();
                for &i in members {
                    v[i] += shift;
                }
                out.push(v);
            }
        }
        out
    }

    fn hits(&self, u: &Vec<i64>, targets: &[&Vec<i64>]) -> Vec<usize> {
        let slacks = self.slacks(u);
        let mut out = Vec::new();
        for (j, t) in targets.iter().enumerate() {
            let Some((k, delta)) = uniform_shift(u, t, &self.by_mask, |b, a| b - a) else { continue };
            let sign = if delta > 0 { Sign::Plus } else { Sign::Minus };
            if self.blocking(&slacks, k, sign) == Some(delta.abs()) {
                out.push(j);
            }
        }
        out
    }
}

/// States met so far by circuit searches and, once expanded, their
/// one-step successors.
struct StateGraph<S> {
    states: Vec<S>,
    index: HashMap<S, usize>,
    successors: Vec<Vec<usize>>,
    expanded: Vec<bool>,
}

impl<S: Clone + Eq + Hash + Send + Sync> StateGraph<S> {
    fn new() -> Self {
        StateGraph { states: Vec::new(), index: HashMap::new(), successors: Vec::new(), expanded: Vec::new() }
    }

    fn intern(&mut self, s: S) -> usize {
        if let Some(&id) = self.index.get(&s) {
            return id;
        }
        let id = self.states.len();
        self.index.insert(s.clone(), id);
        self.states.push(s);
        self.successors.push(Vec::new());
        self.expanded.push(false);
        id
    }

    /// Computes successors of the not yet expanded states among `ids`, in parallel.
    fn expand<M: Moves<State = S>>(&mut self, moves: &M, ids: &[usize]) {
        let todo: Vec<usize> = ids.iter().copied().filter(|&id| !self.expanded[id]).collect();
        let states = &self.states;
        let found: Vec<Vec<S>> = todo.par_iter().map(|&id| moves.successors(&states[id])).collect();
        for (id, dests) in todo.into_iter().zip(found) {
            let succ = dests.into_iter().map(|s| self.intern(s)).collect();
            self.successors[id] = succ;
            self.expanded[id] = true;
        }
    }
}

/// Per-search bookkeeping over a shared [`StateGraph`].
struct Run {
    found: Vec<Option<usize>>,
    /// Predecessor of every state reached, when walks are wanted.
    parents: Option<HashMap<usize, usize>>,
}

/// Runs searches from several sources over one shared [`StateGraph`].
struct Bfs<'m, M: Moves> {
    moves: &'m M,
    graph: StateGraph<M::State>,
    seen: Vec<usize>,
    rounds: usize,
    depth_cap: usize,
    state_cap: usize,
}

impl<'m, M: Moves> Bfs<'m, M> {
    fn new(moves: &'m M, depth_cap: usize, state_cap: usize) -> Self {
        Bfs { moves, graph: StateGraph::new(), seen: Vec::new(), rounds: 0, depth_cap, state_cap }
    }

    /// Level-synchronous BFS from `start` until every target is reached or
    /// the depth cap is hit.
    fn run(&mut self, start: usize, targets: &[usize], want_walks: bool) -> Result<Run> {
        self.rounds += 1;
        let stamp = self.rounds;
        let mut run = Run { found: vec![None; targets.len()], parents: want_walks.then(HashMap::new) };
        let mut open: Vec<usize> = Vec::new();
        for (j, &t) in targets.iter().enumerate() {
            if t == start {
                run.found[j] = Some(0);
            } else {
                open.push(j);
            }
        }
        self.seen.resize(self.graph.states.len(), 0);
        self.seen[start] = stamp;
        let mut visited = 1;
        let mut frontier = vec![start];
        let mut depth = 0;
        while !open.is_empty() && depth < self.depth_cap && !frontier.is_empty() {
            let states = &self.graph.states;
            let wanted: Vec<&M::State> = open.iter().map(|&j| &states[targets[j]]).collect();
            let hits: Vec<Vec<usize>> = frontier.par_iter().map(|&at| self.moves.hits(&states[at], &wanted)).collect();
            for (&at, positions) in frontier.iter().zip(hits) {
                for p in positions {
                    let j = open[p];
                    if run.found[j].is_none() {
                        run.found[j] = Some(depth + 1);
                        if let Some(parents) = run.parents.as_mut() {
                            parents.insert(targets[j], at);
                        }
                    }
                }
            }
            open.retain(|&j| run.found[j].is_none());
            if open.is_empty() || depth + 1 >= self.depth_cap {
                break;
            }
            self.graph.expand(self.moves, &frontier);
            self.seen.resize(self.graph.states.len(), 0);
            let mut next = Vec::new();
            for &at in &frontier {
                for &to in &self.graph.successors[at] {
                    if self.seen[to] == stamp {
                        continue;
                    }
                    self.seen[to] = stamp;
                    visited += 1;
                    if visited > self.state_cap {
                        return Err(Error::FrontierTooLarge { cap: self.state_cap });
                    }
                    if let Some(parents) = run.parents.as_mut() {
                        parents.insert(to, at);
                    }
                    next.push(to);
                }
            }
            frontier = next;
            depth += 1;
        }
        Ok(run)
    }

    /// Length and states of a shortest walk from `u` to `v`.
    fn walk(&mut self, u: M::State, v: M::State) -> Result<(usize, Vec<M::State>)> {
        let start = self.graph.intern(u);
        let target = self.graph.intern(v);
        let run = self.run(start, &[target], true)?;
        let length = run.found[0].ok_or(Error::DepthCapExceeded { cap: self.depth_cap })?;
        let parents = run.parents.expect("requested");
        let mut chain = vec![target];
        while *chain.last().unwrap() != start {
            chain.push(parents[chain.last().unwrap()]);
        }
        Ok((length, chain.into_iter().rev().map(|id| self.graph.states[id].clone()).collect()))
    }

    fn matrix(&mut self, sources: Vec<M::State>, targets: Vec<M::State>) -> Result<Vec<Vec<usize>>> {
        let target_ids: Vec<usize> = targets.into_iter().map(|t| self.graph.intern(t)).collect();
        let mut rows = Vec::with_capacity(sources.len());
        for source in sources {
            let start = self.graph.intern(source);
            let run = self.run(start, &target_ids, false)?;
            let cap = self.depth_cap;
            rows.push(run.found.into_iter().map(|d| d.ok_or(Error::DepthCapExceeded { cap })).collect::<Result<_>>()?);
        }
        Ok(rows)
    }
}

impl<'p, T: Scalar> CircuitSearch<'p, T> {
    pub fn new(poly: &'p Polyhedron<T>) -> Self {
        let partitions = enumerate_partitions(poly.graph());
        let cuts: Vec<_> = partitions
            .iter()
            .map(|p| {
                (p.blocking_edges(poly.graph(), Sign::Plus).collect(), p.blocking_edges(poly.graph(), Sign::Minus).collect())
            })
            .collect();
        let by_mask = partitions.iter().enumerate().map(|(k, p)| (mask_of(p), k)).collect();
        let lattice = Lattice::new(poly, &partitions, &cuts);
        CircuitSearch { poly, partitions, cuts, by_mask, lattice }
    }

    pub fn partitions(&self) -> &[PartitionCircuit] {
        &self.partitions
    }

    fn cut(&self, k: usize, sign: Sign) -> &[usize] {
        match sign {
            Sign::Plus => &self.cuts[k].0,
            Sign::Minus => &self.cuts[k].1,
        }
    }

    /// Applicable maximal steps from a feasible `u`.
    pub fn steps(&self, u: &Point<T>) -> Vec<(usize, Sign, T)> {
        let slacks = self.poly.slacks(u);
        let mut out = Vec::new();
        for k in 0..self.partitions.len() {
            for sign in Sign::BOTH {
                if let Some((eps, _)) = min_slack(&slacks, self.cut(k, sign).iter().copied()) {
                    if eps.is_positive() {
                        out.push((k, sign, eps));
                    }
                }
            }
        }
        out
    }

    pub fn step_to(&self, u: &Point<T>, k: usize, sign: Sign, eps: &T) -> Point<T> {
        self.poly.shifted(u, &self.partitions[k], sign, eps)
    }

    /// The lattice images of `points`, if the lattice exists and holds them all.
    fn embed_all(&self, points: &[Point<T>]) -> Option<(&Lattice, Vec<Vec<i64>>)> {
        let lattice = self.lattice.as_ref()?;
        Some((lattice, points.iter().map(|p| lattice.embed(p)).collect::<Option<_>>()?))
    }

    pub fn distance(&self, u: &Point<T>, v: &Point<T>, limits: &Limits) -> Result<DistanceResult<T>> {
        let depth_cap = limits.depth_for(self.poly.node_count());
        let (length, points) = match self.embed_all(&[u.clone(), v.clone()]) {
            Some((lattice, mut ends)) => {
                let b = ends.pop().expect("two points");
                let a = ends.pop().expect("two points");
                let (length, states) = Bfs::new(lattice, depth_cap, limits.state_cap).walk(a, b)?;
                (length, states.iter().map(|s| lattice.point(s)).collect())
            }
            None => Bfs::new(self, depth_cap, limits.state_cap).walk(u.clone(), v.clone())?,
        };
        let walk = Walk::from_points(self.poly, WalkMode::Circuit, points)?;
        Ok(DistanceResult { length, walk })
    }

    /// Circuit distances from `source` to each of `targets`.
    pub fn distances_from(&self, source: &Point<T>, targets: &[Point<T>], limits: &Limits) -> Result<Vec<usize>> {
        Ok(self.distance_matrix(std::slice::from_ref(source), targets, limits)?.remove(0))
    }

    /// `rows[i][j]` is the circuit distance from `sources[i]` to `targets[j]`.
    ///
    /// All searches share one graph of points, so a point is expanded once no
    /// matter how many sources reach it. `limits.state_cap` bounds the points
    /// visited by each single search.
    pub fn distance_matrix(&self, sources: &[Point<T>], targets: &[Point<T>], limits: &Limits) -> Result<Vec<Vec<usize>>> {
        let depth_cap = limits.depth_for(self.poly.node_count());
        if let (Some((lattice, s)), Some((_, t))) = (self.embed_all(sources), self.embed_all(targets)) {
            return Bfs::new(lattice, depth_cap, limits.state_cap).matrix(s, t);
        }
        Bfs::new(self, depth_cap, limits.state_cap).matrix(sources.to_vec(), targets.to_vec())
    }

    /// Maximum over ordered pairs of `vertices`.
    pub fn diameter(&self, vertices: &[Point<T>], limits: &Limits) -> Result<Diameter<T>> {
        let rows = self.distance_matrix(vertices, vertices, limits)?;
        let mut best: Option<(usize, usize, usize)> = None;
        for (s, row) in rows.iter().enumerate() {
            for (t, &d) in row.iter().enumerate() {
                if best.is_none_or(|(b, _, _)| d > b) {
                    best = Some((d, s, t));
                }
            }
        }
        Ok(match best {
            None => Diameter { value: 0, witness: None },
            Some((value, s, t)) => Diameter { value, witness: Some((vertices[s].clone(), vertices[t].clone())) },
        })
    }
}
