//! Social networks, seedings and directed information structures.
//!
//! Agents are numbered `1..=I`; the planner is agent `0` and never appears
//! in an undirected network. Seeding a forest orients every tree away from
//! its seed and adds a planner link to each seed, producing an
//! [`InformationStructure`] in which every agent has exactly one in-link.
//! Hand-built structures (cycles, double seeds) may have several in-links
//! per agent and per-link relay rules.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::Caps;

/// Largest agent index representable in a [`SourceSet`].
pub const MAX_AGENT_INDEX: usize = 63;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AgentId(pub usize);

impl AgentId {
    pub const PLANNER: AgentId = AgentId(0);

    pub fn index(self) -> usize {
        self.0
    }

    pub fn is_planner(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for AgentId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Set of senders an agent received the message from (bit `k` = agent `k`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SourceSet(pub u64);

impl SourceSet {
    pub const EMPTY: SourceSet = SourceSet(0);

    pub fn single(agent: AgentId) -> Self {
        SourceSet(1 << agent.0)
    }

    pub fn from_agents<I: IntoIterator<Item = AgentId>>(agents: I) -> Self {
        SourceSet(agents.into_iter().fold(0, |acc, a| acc | (1 << a.0)))
    }

    /// An agent is informed iff at least one message arrived.
    pub fn is_informed(self) -> bool {
        self.0 != 0
    }

    pub fn contains(self, agent: AgentId) -> bool {
        self.0 & (1 << agent.0) != 0
    }

    pub fn intersects(self, other: SourceSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn insert(&mut self, agent: AgentId) {
        self.0 |= 1 << agent.0;
    }

    pub fn agents(self) -> impl Iterator<Item = AgentId> {
        (0..64).filter(move |k| self.0 & (1u64 << k) != 0).map(AgentId)
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for SourceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "n");
        }
        write!(f, "y[")?;
        for (k, a) in self.agents().enumerate() {
            if k > 0 {
                write!(f, "&")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, "]")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NetworkError {
    #[error("agent count must be positive")]
    NoAgents,
    #[error("bad edge {a}-{b}: {reason}")]
    BadEdge {
        a: usize,
        b: usize,
        reason: &'static str,
    },
    #[error("edge {a}-{b} closes a cycle")]
    CycleDetected { a: usize, b: usize },
    #[error("seeding mismatch: {0}")]
    SeedMismatch(String),
    #[error("agent {0} does not have exactly one in-link")]
    NotATree(AgentId),
    #[error("agent {0} is out of range")]
    UnknownAgent(AgentId),
    #[error("bad link {from}->{to}: {reason}")]
    BadLink {
        from: usize,
        to: usize,
        reason: &'static str,
    },
    #[error("agent {0} can never receive the message")]
    Unreachable(AgentId),
    #[error("{what} {requested} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        requested: usize,
        cap: usize,
    },
}

/// Undirected simple graph on agents `1..=I`, possibly cyclic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedGraph {
    agent_count: usize,
    adjacency: Vec<BTreeSet<usize>>,
    component_of: Vec<usize>,
    components: Vec<Vec<AgentId>>,
}

impl UndirectedGraph {
    pub fn new(agent_count: usize, edges: &[(usize, usize)]) -> Result<Self, NetworkError> {
        if agent_count == 0 {
            return Err(NetworkError::NoAgents);
        }
        if agent_count > MAX_AGENT_INDEX {
            return Err(NetworkError::CapExceeded {
                what: "agent count",
                requested: agent_count,
                cap: MAX_AGENT_INDEX,
            });
        }
        let mut adjacency = vec![BTreeSet::new(); agent_count + 1];
        for &(a, b) in edges {
            let bad = |reason| NetworkError::BadEdge { a, b, reason };
            if a == b {
                return Err(bad("self-loop"));
            }
            if a == 0 || b == 0 || a > agent_count || b > agent_count {
                return Err(bad("agent id out of range"));
            }
            if !adjacency[a].insert(b) {
                return Err(bad("duplicate edge"));
            }
            adjacency[b].insert(a);
        }

        let mut component_of = vec![usize::MAX; agent_count + 1];
        let mut components = Vec::new();
        for start in 1..=agent_count {
            if component_of[start] != usize::MAX {
                continue;
            }
            let id = components.len();
            let mut members = Vec::new();
            let mut queue = VecDeque::from([start]);
            component_of[start] = id;
            while let Some(u) = queue.pop_front() {
                members.push(AgentId(u));
                for &v in &adjacency[u] {
                    if component_of[v] == usize::MAX {
                        component_of[v] = id;
                        queue.push_back(v);
                    }
                }
            }
            members.sort();
            components.push(members);
        }

        Ok(UndirectedGraph {
            agent_count,
            adjacency,
            component_of,
            components,
        })
    }

    pub fn agent_count(&self) -> usize {
        self.agent_count
    }

    pub fn neighbors(&self, agent: AgentId) -> impl Iterator<Item = AgentId> + '_ {
        self.adjacency[agent.0].iter().map(|&v| AgentId(v))
    }

    /// Edges as `(low, high)` pairs in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (1..=self.agent_count)
            .flat_map(|a| {
                self.adjacency[a]
                    .iter()
                    .filter(move |&&b| b > a)
                    .map(move |&b| (a, b))
            })
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(BTreeSet::len).sum::<usize>() / 2
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> &[Vec<AgentId>] {
        &self.components
    }

    pub fn component_of(&self, agent: AgentId) -> usize {
        self.component_of[agent.0]
    }

    /// First edge (in [`UndirectedGraph::edges`] order) that closes a cycle.
    pub fn find_cycle_edge(&self) -> Option<(usize, usize)> {
        let mut parent: Vec<usize> = (0..=self.agent_count).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for (a, b) in self.edges() {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra == rb {
                return Some((a, b));
            }
            parent[ra] = rb;
        }
        None
    }
}

/// Acyclic undirected network: a disjoint union of trees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UndirectedForest {
    graph: UndirectedGraph,
}

impl UndirectedForest {
    pub fn graph(&self) -> &UndirectedGraph {
        &self.graph
    }

    pub fn agent_count(&self) -> usize {
        self.graph.agent_count
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.graph.edges()
    }

    pub fn components(&self) -> &[Vec<AgentId>] {
        self.graph.components()
    }

    pub fn neighbors(&self, agent: AgentId) -> impl Iterator<Item = AgentId> + '_ {
        self.graph.neighbors(agent)
    }
}

/// Validates an edge list as a forest on agents `1..=agent_count`.
pub fn build_forest(
    agent_count: usize,
    edges: &[(usize, usize)],
) -> Result<UndirectedForest, NetworkError> {
    let graph = UndirectedGraph::new(agent_count, edges)?;
    if let Some((a, b)) = graph.find_cycle_edge() {
        return Err(NetworkError::CycleDetected { a, b });
    }
    Ok(UndirectedForest { graph })
}

/// One seed per connected component.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Seeding {
    pub seeds: Vec<AgentId>,
}

impl Seeding {
    pub fn new<I: IntoIterator<Item = usize>>(seeds: I) -> Self {
        Seeding {
            seeds: seeds.into_iter().map(AgentId).collect(),
        }
    }
}

/// When a sender forwards a message it has received.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Relay {
    /// Forward whenever informed, whatever the source.
    #[default]
    Any,
    /// Forward only messages received directly from one of these senders.
    Only(Vec<AgentId>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Link {
    pub from: AgentId,
    pub to: AgentId,
    #[serde(default)]
    pub relay: Relay,
}

impl Link {
    pub fn new(from: usize, to: usize) -> Self {
        Link {
            from: AgentId(from),
            to: AgentId(to),
            relay: Relay::Any,
        }
    }

    pub fn relaying_only(from: usize, to: usize, sources: &[usize]) -> Self {
        Link {
            from: AgentId(from),
            to: AgentId(to),
            relay: Relay::Only(sources.iter().map(|&s| AgentId(s)).collect()),
        }
    }
}

/// Directed message graph rooted at the planner.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InformationStructure {
    agent_count: usize,
    links: Vec<Link>,
    /// Per link: sender sources that trigger forwarding (`None` = any).
    relay_masks: Vec<Option<SourceSet>>,
    in_links: Vec<Vec<usize>>,
    /// Link indices in breadth-first order from the planner.
    propagation_order: Vec<usize>,
}

impl InformationStructure {
    /// Validates a hand-built link set: ids in range, no self or duplicate
    /// links, nothing pointing at the planner, and every agent reachable
    /// when no message is lost.
    pub fn new(agent_count: usize, links: Vec<Link>) -> Result<Self, NetworkError> {
        if agent_count == 0 {
            return Err(NetworkError::NoAgents);
        }
        if agent_count > MAX_AGENT_INDEX {
            return Err(NetworkError::CapExceeded {
                what: "agent count",
                requested: agent_count,
                cap: MAX_AGENT_INDEX,
            });
        }
        let mut seen = BTreeSet::new();
        let mut in_links = vec![Vec::new(); agent_count + 1];
        let mut out_links = vec![Vec::new(); agent_count + 1];
        let mut relay_masks = Vec::with_capacity(links.len());
        for (idx, link) in links.iter().enumerate() {
            let (from, to) = (link.from.0, link.to.0);
            let bad = |reason| NetworkError::BadLink { from, to, reason };
            if from > agent_count || to > agent_count {
                return Err(bad("agent id out of range"));
            }
            if to == 0 {
                return Err(bad("links cannot point at the planner"));
            }
            if from == to {
                return Err(bad("self-link"));
            }
            if !seen.insert((from, to)) {
                return Err(bad("duplicate link"));
            }
            in_links[to].push(idx);
            out_links[from].push(idx);
            relay_masks.push(match &link.relay {
                Relay::Any => None,
                Relay::Only(sources) => {
                    if sources.iter().any(|s| s.0 > agent_count) {
                        return Err(bad("relay source out of range"));
                    }
                    Some(SourceSet::from_agents(sources.iter().copied()))
                }
            });
        }

        let mut propagation_order = Vec::with_capacity(links.len());
        let mut visited = vec![false; agent_count + 1];
        let mut queue = VecDeque::from([0usize]);
        visited[0] = true;
        while let Some(u) = queue.pop_front() {
            for &l in &out_links[u] {
                propagation_order.push(l);
                let v = links[l].to.0;
                if !visited[v] {
                    visited[v] = true;
                    queue.push_back(v);
                }
            }
        }
        // Links out of unreachable senders still belong to the structure.
        for l in 0..links.len() {
            if !propagation_order.contains(&l) {
                propagation_order.push(l);
            }
        }

        let info = InformationStructure {
            agent_count,
            links,
            relay_masks,
            in_links,
            propagation_order,
        };
        let full = info.received_sources(|_| true);
        if let Some(i) = (1..=agent_count).find(|&i| !full[i].is_informed()) {
            return Err(NetworkError::Unreachable(AgentId(i)));
        }
        Ok(info)
    }

    pub fn agent_count(&self) -> usize {
        self.agent_count
    }

    pub fn links(&self) -> &[Link] {
        &self.links
    }

    pub fn link_count(&self) -> usize {
        self.links.len()
    }

    pub fn agents(&self) -> impl Iterator<Item = AgentId> {
        (1..=self.agent_count).map(AgentId)
    }

    /// Senders with a link into `agent`, in link order.
    pub fn in_sources(&self, agent: AgentId) -> Vec<AgentId> {
        self.in_links[agent.0]
            .iter()
            .map(|&l| self.links[l].from)
            .collect()
    }

    /// Agents receiving a link directly from the planner.
    pub fn seeds(&self) -> Vec<AgentId> {
        let mut seeds: Vec<AgentId> = self
            .links
            .iter()
            .filter(|l| l.from.is_planner())
            .map(|l| l.to)
            .collect();
        seeds.sort();
        seeds
    }

    /// Every agent has exactly one in-link.
    pub fn is_tree(&self) -> bool {
        (1..=self.agent_count).all(|i| self.in_links[i].len() == 1)
    }

    /// Whether the link out of `from` fires given what `from` received.
    pub fn forwards(&self, link: usize, sender_sources: SourceSet) -> bool {
        if self.links[link].from.is_planner() {
            return true;
        }
        match self.relay_masks[link] {
            None => sender_sources.is_informed(),
            Some(mask) => sender_sources.intersects(mask),
        }
    }

    /// Least fixed point of message delivery for a given link outcome
    /// profile. `delivered(l)` says whether link `l` would carry a message
    /// if its sender forwarded one. Index 0 of the result is the planner.
    pub fn received_sources<F: Fn(usize) -> bool>(&self, delivered: F) -> Vec<SourceSet> {
        let mut sources = vec![SourceSet::EMPTY; self.agent_count + 1];
        loop {
            let mut changed = false;
            for &l in &self.propagation_order {
                let link = &self.links[l];
                if sources[link.to.0].contains(link.from) || !delivered(l) {
                    continue;
                }
                if self.forwards(l, sources[link.from.0]) {
                    sources[link.to.0].insert(link.from);
                    changed = true;
                }
            }
            if !changed {
                return sources;
            }
        }
    }

    fn check_agent(&self, agent: AgentId) -> Result<(), NetworkError> {
        if agent.0 == 0 || agent.0 > self.agent_count {
            Err(NetworkError::UnknownAgent(agent))
        } else {
            Ok(())
        }
    }

    /// Unique predecessor of `agent` (tree case).
    pub fn parent(&self, agent: AgentId) -> Result<AgentId, NetworkError> {
        self.check_agent(agent)?;
        match self.in_links[agent.0].as_slice() {
            [l] => Ok(self.links[*l].from),
            _ => Err(NetworkError::NotATree(agent)),
        }
    }

    /// Planner-to-agent path, starting at `0` and ending at `agent`.
    pub fn path_from_root(&self, agent: AgentId) -> Result<Vec<AgentId>, NetworkError> {
        let mut path = vec![agent];
        let mut current = agent;
        while !current.is_planner() {
            current = self.parent(current)?;
            if path.len() > self.agent_count {
                return Err(NetworkError::NotATree(agent));
            }
            path.push(current);
        }
        path.reverse();
        Ok(path)
    }

    /// Number of links between the planner and `agent` (tree case).
    pub fn depth(&self, agent: AgentId) -> Result<usize, NetworkError> {
        Ok(self.path_from_root(agent)?.len() - 1)
    }

    /// Depth of every agent, indexed by `agent - 1`.
    pub fn depths(&self) -> Result<Vec<usize>, NetworkError> {
        self.agents().map(|a| self.depth(a)).collect()
    }

    /// Undirected agent-to-agent edges underlying the links.
    pub fn underlying_edges(&self) -> BTreeSet<(usize, usize)> {
        self.links
            .iter()
            .filter(|l| !l.from.is_planner())
            .map(|l| (l.from.0.min(l.to.0), l.from.0.max(l.to.0)))
            .collect()
    }

    /// Agents at the end of a planner path with no outgoing links.
    pub fn leaves(&self) -> Vec<AgentId> {
        let mut has_out = vec![false; self.agent_count + 1];
        for l in &self.links {
            has_out[l.from.0] = true;
        }
        self.agents().filter(|a| !has_out[a.0]).collect()
    }
}

/// Orients each tree of `forest` away from its seed.
pub fn orient(
    forest: &UndirectedForest,
    seeding: &Seeding,
) -> Result<InformationStructure, NetworkError> {
    let components = forest.components();
    if seeding.seeds.len() != components.len() {
        return Err(NetworkError::SeedMismatch(format!(
            "{} seeds for {} components",
            seeding.seeds.len(),
            components.len()
        )));
    }
    let mut covered = vec![false; components.len()];
    for &seed in &seeding.seeds {
        if seed.0 == 0 || seed.0 > forest.agent_count() {
            return Err(NetworkError::SeedMismatch(format!(
                "seed {seed} is not an agent"
            )));
        }
        let c = forest.graph.component_of(seed);
        if covered[c] {
            return Err(NetworkError::SeedMismatch(format!(
                "component containing {seed} has more than one seed"
            )));
        }
        covered[c] = true;
    }

    let mut links = Vec::with_capacity(forest.agent_count());
    let mut visited = vec![false; forest.agent_count() + 1];
    for &seed in &seeding.seeds {
        links.push(Link::new(0, seed.0));
        visited[seed.0] = true;
        let mut queue = VecDeque::from([seed]);
        while let Some(u) = queue.pop_front() {
            for v in forest.neighbors(u) {
                if !visited[v.0] {
                    visited[v.0] = true;
                    links.push(Link::new(u.0, v.0));
                    queue.push_back(v);
                }
            }
        }
    }
    InformationStructure::new(forest.agent_count(), links)
}

/// Decodes a Prüfer sequence over labels `0..n` into the `n - 1` tree edges.
pub fn prufer_decode(sequence: &[usize], n: usize) -> Vec<(usize, usize)> {
    debug_assert_eq!(sequence.len() + 2, n.max(2));
    if n < 2 {
        return Vec::new();
    }
    let mut degree = vec![1usize; n];
    for &x in sequence {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in sequence {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

/// All sequences in `[0, base)^len`, in lexicographic order.
fn sequences(base: usize, len: usize) -> impl Iterator<Item = Vec<usize>> {
    let total = base.pow(len as u32);
    (0..total).map(move |mut code| {
        let mut seq = vec![0; len];
        for slot in seq.iter_mut().rev() {
            *slot = code % base;
            code /= base;
        }
        seq
    })
}

fn check_enumeration_size(agent_count: usize, caps: &Caps) -> Result<(), NetworkError> {
    if agent_count == 0 {
        return Err(NetworkError::NoAgents);
    }
    if agent_count > caps.max_agents {
        return Err(NetworkError::CapExceeded {
            what: "agent count",
            requested: agent_count,
            cap: caps.max_agents,
        });
    }
    Ok(())
}

/// Every labeled tree on agents `1..=agent_count` (`I^(I-2)` of them).
pub fn labeled_trees(
    agent_count: usize,
    caps: &Caps,
) -> Result<impl Iterator<Item = UndirectedForest>, NetworkError> {
    check_enumeration_size(agent_count, caps)?;
    let len = agent_count.saturating_sub(2);
    Ok(sequences(agent_count, len).map(move |seq| {
        let edges: Vec<(usize, usize)> = prufer_decode(&seq, agent_count)
            .into_iter()
            .map(|(a, b)| (a + 1, b + 1))
            .collect();
        build_forest(agent_count, &edges).expect("Prüfer decoding yields a tree")
    }))
}

/// Every spanning tree crossed with every choice of seed.
pub fn enumerate_trees(
    agent_count: usize,
    caps: &Caps,
) -> Result<impl Iterator<Item = (UndirectedForest, Seeding)>, NetworkError> {
    Ok(labeled_trees(agent_count, caps)?.flat_map(move |tree| {
        (1..=agent_count).map(move |s| (tree.clone(), Seeding::new([s])))
    }))
}

/// Every seeded forest on `agent_count` agents, single trees included.
///
/// A seeded forest is the same thing as a labeled tree on `0..=I` with the
/// planner's neighbors as seeds, so there are `(I+1)^(I-1)` of them.
pub fn enumerate_seeded_forests(
    agent_count: usize,
    caps: &Caps,
) -> Result<impl Iterator<Item = (UndirectedForest, Seeding)>, NetworkError> {
    check_enumeration_size(agent_count, caps)?;
    let n = agent_count + 1;
    Ok(sequences(n, n - 2).map(move |seq| seeded_forest_from_prufer(&seq, agent_count)))
}

/// Decodes a Prüfer sequence over `0..=agent_count` into a seeded forest.
pub fn seeded_forest_from_prufer(sequence: &[usize], agent_count: usize) -> (UndirectedForest, Seeding) {
    let edges = prufer_decode(sequence, agent_count + 1);
    let mut seeds = Vec::new();
    let mut forest_edges = Vec::new();
    for (a, b) in edges {
        if a == 0 {
            seeds.push(b);
        } else {
            forest_edges.push((a, b));
        }
    }
    let forest = build_forest(agent_count, &forest_edges).expect("sub-forest of a tree");
    // Order seeds by component so the seeding lines up with `components()`.
    seeds.sort_by_key(|&s| forest.graph.component_of(AgentId(s)));
    (forest, Seeding::new(seeds))
}

/// Seeded forests with more than one tree.
pub fn enumerate_multi_tree_forests(
    agent_count: usize,
    caps: &Caps,
) -> Result<impl Iterator<Item = (UndirectedForest, Seeding)>, NetworkError> {
    Ok(enumerate_seeded_forests(agent_count, caps)?.filter(|(f, _)| f.components().len() > 1))
}

/// Line `1 - 2 - ... - I`.
pub fn line(agent_count: usize) -> Result<UndirectedForest, NetworkError> {
    let edges: Vec<(usize, usize)> = (1..agent_count).map(|i| (i, i + 1)).collect();
    build_forest(agent_count, &edges)
}

/// Star with hub `1`.
pub fn star(agent_count: usize) -> Result<UndirectedForest, NetworkError> {
    let edges: Vec<(usize, usize)> = (2..=agent_count).map(|i| (1, i)).collect();
    build_forest(agent_count, &edges)
}

/// Every agent seeded directly by the planner.
pub fn broadcast(agent_count: usize) -> Result<InformationStructure, NetworkError> {
    let forest = build_forest(agent_count, &[])?;
    orient(&forest, &Seeding::new(1..=agent_count))
}
