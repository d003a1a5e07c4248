//! Hop distances, eccentricity, diameter, radius and center.

use serde::{Serialize, Serializer};

use crate::graph::Graph;

pub type Distance = u32;

/// Distance between vertices in different components. Larger than every
/// finite distance.
pub const INFINITE: Distance = Distance::MAX;

#[derive(Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<Distance>,
}

impl DistanceMatrix {
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: usize, v: usize) -> Distance {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[Distance] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    /// Largest finite entry, or [`INFINITE`] if some pair is disconnected.
    pub fn diameter(&self) -> Distance {
        self.d.iter().copied().max().unwrap_or(0)
    }
}

impl std::fmt::Debug for DistanceMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut l = f.debug_list();
        for u in 0..self.n {
            l.entry(&self.row(u));
        }
        l.finish()
    }
}

/// BFS from every vertex.
pub fn all_pairs_distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![INFINITE; n * n];
    let mut queue = Vec::with_capacity(n);
    for s in 0..n {
        let row = &mut d[s * n..(s + 1) * n];
        row[s] = 0;
        queue.clear();
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let x = queue[head];
            head += 1;
            let next = row[x] + 1;
            for y in g.neighbors(x) {
                if row[y] == INFINITE {
                    row[y] = next;
                    queue.push(y);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

/// Distances from a single source.
pub fn distances_from(g: &Graph, source: usize) -> Vec<Distance> {
    let mut row = vec![INFINITE; g.n()];
    row[source] = 0;
    let mut queue = vec![source];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for y in g.neighbors(x) {
            if row[y] == INFINITE {
                row[y] = row[x] + 1;
                queue.push(y);
            }
        }
    }
    row
}

pub fn diameter(g: &Graph) -> Distance {
    all_pairs_distances(g).diameter()
}

fn ser_distance<S: Serializer>(d: &Distance, s: S) -> Result<S::Ok, S::Error> {
    if *d == INFINITE {
        s.serialize_none()
    } else {
        s.serialize_some(d)
    }
}

fn ser_distances<S: Serializer>(ds: &[Distance], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(ds.len()))?;
    for d in ds {
        seq.serialize_element(&(*d != INFINITE).then_some(*d))?;
    }
    seq.end()
}

/// Infinite values serialize as `null`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricSummary {
    #[serde(serialize_with = "ser_distance")]
    pub diameter: Distance,
    #[serde(serialize_with = "ser_distance")]
    pub radius: Distance,
    /// Empty for disconnected graphs.
    pub center: Vec<usize>,
    #[serde(serialize_with = "ser_distances")]
    pub eccentricity: Vec<Distance>,
}

pub fn metric_summary(g: &Graph) -> MetricSummary {
    summary_from(&all_pairs_distances(g))
}

pub fn summary_from(dm: &DistanceMatrix) -> MetricSummary {
    let n = dm.n();
    let eccentricity: Vec<Distance> = (0..n).map(|v| dm.row(v).iter().copied().max().unwrap_or(0)).collect();
    let diameter = eccentricity.iter().copied().max().unwrap_or(0);
    let radius = eccentricity.iter().copied().min().unwrap_or(0);
    let center = if diameter == INFINITE {
        Vec::new()
    } else {
        (0..n).filter(|&v| eccentricity[v] == radius).collect()
    };
    MetricSummary {
        diameter,
        radius,
        center,
        eccentricity,
    }
}
