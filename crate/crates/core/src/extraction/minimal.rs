use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use thiserror::Error;

use super::dijkstra::{hyperpath_proof, sbt_dijkstra};
use crate::hypergraph::{DerivationStructure, EdgeId, Proof, Sentence, VertexId};

/// Limits for the exact search.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    /// Maximum number of search nodes expanded.
    pub budget: u64,
    pub cancel: Option<Arc<AtomicBool>>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig { budget: 1_000_000, cancel: None }
    }
}

impl SearchConfig {
    pub fn with_budget(budget: u64) -> Self {
        SearchConfig { budget, cancel: None }
    }
}

/// The search stopped early. `incumbent` is the best proof found so far.
#[derive(Debug, Error)]
pub enum SearchError<L> {
    #[error("search budget of {budget} nodes exhausted")]
    Budget { budget: u64, incumbent: Option<Proof<L>> },
    #[error("search cancelled")]
    Cancelled { incumbent: Option<Proof<L>> },
}

impl<L> SearchError<L> {
    pub fn incumbent(&self) -> Option<&Proof<L>> {
        match self {
            SearchError::Budget { incumbent, .. } | SearchError::Cancelled { incumbent } => incumbent.as_ref(),
        }
    }
}

/// A proof of `eta` with a minimal number of vertices whose hypergraph is a
/// substructure of `d`. `None` if `eta` is not derivable in `d`.
pub fn minimal_proof<L: Sentence>(
    d: &DerivationStructure<L>,
    eta: &L,
    config: &SearchConfig,
) -> Result<Option<Proof<L>>, SearchError<L>> {
    let Some((mut search, targets)) = Search::new(d, eta, config) else {
        return Ok(None);
    };
    let outcome = search.run(&targets);
    let best = search.best_proof();
    match outcome {
        Ok(()) | Err(Stop::Found) => Ok(best),
        Err(Stop::Budget) => Err(SearchError::Budget { budget: config.budget, incumbent: best }),
        Err(Stop::Cancelled) => Err(SearchError::Cancelled { incumbent: best }),
    }
}

/// Whether `d` contains a proof of `eta` with at most `n` vertices.
pub fn decide_mp<L: Sentence>(
    d: &DerivationStructure<L>,
    eta: &L,
    n: usize,
    config: &SearchConfig,
) -> Result<bool, SearchError<L>> {
    if n == 0 {
        return Ok(false);
    }
    let Some((mut search, targets)) = Search::new(d, eta, config) else {
        return Ok(false);
    };
    if search.best_size <= n {
        return Ok(true);
    }
    search.best_size = n + 1;
    search.best = None;
    search.early_exit = true;
    match search.run(&targets) {
        Ok(()) | Err(Stop::Found) => Ok(search.best.is_some()),
        Err(Stop::Budget) => Err(SearchError::Budget { budget: config.budget, incumbent: None }),
        Err(Stop::Cancelled) => Err(SearchError::Cancelled { incumbent: None }),
    }
}

enum Stop {
    Budget,
    Cancelled,
    Found,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Pick {
    Leaf,
    Edge(EdgeId),
}

struct Search<'a, L> {
    d: &'a DerivationStructure<L>,
    config: &'a SearchConfig,
    goal_labeled: Vec<bool>,
    nodes: u64,
    included: Vec<bool>,
    count: usize,
    pick: Vec<Option<Pick>>,
    open: Vec<VertexId>,
    sink: VertexId,
    best_size: usize,
    best: Option<(VertexId, Vec<Option<Pick>>)>,
    early_exit: bool,
}

impl<'a, L: Sentence> Search<'a, L> {
    fn new(d: &'a DerivationStructure<L>, eta: &L, config: &'a SearchConfig) -> Option<(Self, Vec<VertexId>)> {
        let g = &d.graph;
        let state = sbt_dijkstra(d);
        let targets: Vec<VertexId> = g.vertices_labeled(eta).filter(|v| state.weight[v.index()].is_some()).collect();
        let seed = targets
            .iter()
            .map(|&t| {
                let p = hyperpath_proof(d, &state, t);
                (p.vertex_count(), t, p)
            })
            .min_by_key(|(n, t, _)| (*n, *t))?;
        let (best_size, t, p) = seed;
        let mut pick = vec![None; g.vertex_count()];
        for v in p.graph().vertices() {
            let orig = p.graph().provenance(v).unwrap();
            pick[orig.index()] = Some(match p.graph().incoming(v).first() {
                None => Pick::Leaf,
                Some(&e) => {
                    let edge = p.graph().edge(e);
                    let ps: Vec<VertexId> =
                        edge.premises.iter().map(|&q| p.graph().provenance(q).unwrap()).collect();
                    Pick::Edge(g.find_edge(&ps, orig).unwrap())
                }
            });
        }
        let goal_labeled = g.vertices().map(|v| g.label(v) == eta).collect();
        let search = Search {
            d,
            config,
            goal_labeled,
            nodes: 0,
            included: vec![false; g.vertex_count()],
            count: 0,
            pick: vec![None; g.vertex_count()],
            open: Vec::new(),
            sink: t,
            best_size,
            best: Some((t, pick)),
            early_exit: false,
        };
        Some((search, targets))
    }

    fn run(&mut self, targets: &[VertexId]) -> Result<(), Stop> {
        for &t in targets {
            self.sink = t;
            self.include(t);
            let r = self.dfs();
            self.exclude(t);
            match r {
                Err(Stop::Found) => return Ok(()),
                Err(e) => return Err(e),
                Ok(()) => {}
            }
        }
        Ok(())
    }

    fn best_proof(&self) -> Option<Proof<L>> {
        let (sink, pick) = self.best.as_ref()?;
        let edges: Vec<EdgeId> = pick
            .iter()
            .filter_map(|p| match p {
                Some(Pick::Edge(e)) => Some(*e),
                _ => None,
            })
            .collect();
        let extra = (0..pick.len()).filter(|&i| pick[i].is_some()).map(|i| VertexId(i as u32));
        let (structure, map) = self.d.substructure(edges, extra);
        Some(Proof { structure, sink: map[sink.index()].unwrap() })
    }

    fn include(&mut self, v: VertexId) {
        self.included[v.index()] = true;
        self.count += 1;
        self.open.push(v);
    }

    fn exclude(&mut self, v: VertexId) {
        self.included[v.index()] = false;
        self.count -= 1;
        let pos = self.open.iter().rposition(|&u| u == v).unwrap();
        self.open.remove(pos);
    }

    /// Candidate edges for `v` with the number of vertices each would add.
    fn options(&self, v: VertexId) -> Vec<(usize, Pick)> {
        if self.d.is_theory(v) {
            return vec![(0, Pick::Leaf)];
        }
        let g = &self.d.graph;
        let mut out: Vec<(usize, Pick)> = g
            .incoming(v)
            .iter()
            .filter_map(|&e| {
                let ps = &g.edge(e).premises;
                if ps.iter().any(|&p| p == v || self.goal_labeled[p.index()]) {
                    return None;
                }
                let new = ps.iter().filter(|p| !self.included[p.index()]).count();
                Some((new, Pick::Edge(e)))
            })
            .collect();
        out.sort_by_key(|&(n, p)| {
            (
                n,
                match p {
                    Pick::Edge(e) => g.edge(e).premises.len(),
                    Pick::Leaf => 0,
                },
            )
        });
        out
    }

    /// Does `from` depend on `target` through picked edges?
    fn depends_on(&self, from: VertexId, target: VertexId, seen: &mut Vec<VertexId>) -> bool {
        let mut stack = vec![from];
        while let Some(u) = stack.pop() {
            if u == target {
                return true;
            }
            if seen.contains(&u) {
                continue;
            }
            seen.push(u);
            if let Some(Pick::Edge(e)) = self.pick[u.index()] {
                stack.extend(self.d.graph.edge(e).premises.iter().copied());
            }
        }
        false
    }

    fn tick(&mut self) -> Result<(), Stop> {
        self.nodes += 1;
        if self.nodes > self.config.budget {
            return Err(Stop::Budget);
        }
        if let Some(c) = &self.config.cancel {
            if c.load(Ordering::Relaxed) {
                return Err(Stop::Cancelled);
            }
        }
        Ok(())
    }

    fn dfs(&mut self) -> Result<(), Stop> {
        self.tick()?;
        if self.open.is_empty() {
            if self.count < self.best_size {
                self.best_size = self.count;
                self.best = Some((self.sink, self.pick.clone()));
                if self.early_exit {
                    return Err(Stop::Found);
                }
            }
            return Ok(());
        }
        let mut branch: Option<(usize, VertexId, Vec<(usize, Pick)>)> = None;
        let mut bound = 0;
        for &v in &self.open {
            let opts = self.options(v);
            let Some(&(min_new, _)) = opts.first() else { return Ok(()) };
            bound = bound.max(min_new);
            if branch.as_ref().is_none_or(|(n, _, _)| opts.len() < *n) {
                branch = Some((opts.len(), v, opts));
            }
        }
        if self.count + bound >= self.best_size {
            return Ok(());
        }
        let (_, v, opts) = branch.unwrap();
        let pos = self.open.iter().position(|&u| u == v).unwrap();
        self.open.remove(pos);
        for (new, p) in opts {
            if self.count + new >= self.best_size {
                break;
            }
            let added: Vec<VertexId> = match p {
                Pick::Leaf => Vec::new(),
                Pick::Edge(e) => {
                    let ps = self.d.graph.edge(e).premises.clone();
                    let mut seen = Vec::new();
                    if ps.iter().any(|&u| self.included[u.index()] && self.depends_on(u, v, &mut seen)) {
                        continue;
                    }
                    ps.into_iter().filter(|u| !self.included[u.index()]).collect()
                }
            };
            self.pick[v.index()] = Some(p);
            for &u in &added {
                self.include(u);
            }
            let r = self.dfs();
            for &u in added.iter().rev() {
                self.exclude(u);
            }
            self.pick[v.index()] = None;
            if r.is_err() {
                self.open.insert(pos, v);
                return r;
            }
        }
        self.open.insert(pos, v);
        Ok(())
    }
}
