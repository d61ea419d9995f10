//! Color diagrams: finite simple graphs whose nodes color poset elements.

use crate::error::Error;
use std::collections::HashMap;
use std::fmt;

/// Index of a color in its diagram's declared order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Color(pub usize);

#[derive(Debug, Clone)]
pub struct DynkinDiagram {
    names: Vec<String>,
    index: HashMap<String, Color>,
    adj: Vec<Vec<bool>>,
    edges: Vec<(Color, Color)>,
}

impl DynkinDiagram {
    /// Build from node names (declared order is the color order) and
    /// undirected edges given as name pairs.
    pub fn new<S: AsRef<str>>(names: &[S], edges: &[(S, S)]) -> Result<Self, Error> {
        if names.is_empty() {
            return Err(Error::input("diagram needs at least one color"));
        }
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        let mut index = HashMap::new();
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(Error::input("empty color name"));
            }
            if index.insert(n.clone(), Color(i)).is_some() {
                return Err(Error::input(format!("duplicate color {n}")));
            }
        }
        let k = names.len();
        let mut adj = vec![vec![false; k]; k];
        let mut norm = Vec::new();
        for (a, b) in edges {
            let a = *index
                .get(a.as_ref())
                .ok_or_else(|| Error::input(format!("unknown color {}", a.as_ref())))?;
            let b = *index
                .get(b.as_ref())
                .ok_or_else(|| Error::input(format!("unknown color {}", b.as_ref())))?;
            if a == b {
                return Err(Error::input(format!("self-loop at color {}", names[a.0])));
            }
            if adj[a.0][b.0] {
                return Err(Error::input(format!(
                    "repeated edge {}-{}",
                    names[a.0], names[b.0]
                )));
            }
            adj[a.0][b.0] = true;
            adj[b.0][a.0] = true;
            norm.push((a.min(b), a.max(b)));
        }
        norm.sort();
        Ok(DynkinDiagram {
            names,
            index,
            adj,
            edges: norm,
        })
    }

    /// A path diagram a_1 - a_2 - ... - a_n.
    pub fn path(n: usize) -> Self {
        let names: Vec<String> = (1..=n).map(|i| format!("a{i}")).collect();
        let edges: Vec<(String, String)> = (1..n)
            .map(|i| (format!("a{i}"), format!("a{}", i + 1)))
            .collect();
        DynkinDiagram::new(&names, &edges).expect("path diagram is valid")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn colors(&self) -> impl Iterator<Item = Color> {
        (0..self.names.len()).map(Color)
    }

    pub fn name(&self, c: Color) -> &str {
        &self.names[c.0]
    }

    pub fn color(&self, name: &str) -> Option<Color> {
        self.index.get(name).copied()
    }

    pub fn adjacent(&self, a: Color, b: Color) -> bool {
        self.adj[a.0][b.0]
    }

    pub fn edges(&self) -> &[(Color, Color)] {
        &self.edges
    }

    pub fn neighbors(&self, a: Color) -> impl Iterator<Item = Color> + '_ {
        self.adj[a.0]
            .iter()
            .enumerate()
            .filter(|(_, &x)| x)
            .map(|(i, _)| Color(i))
    }

    /// True when the diagram is connected as a graph. Disconnected
    /// diagrams are allowed; callers may warn.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.names.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for Color(j) in self.neighbors(Color(i)) {
                if !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        seen.into_iter().all(|x| x)
    }

    /// Generalized Cartan matrix: 2 on the diagonal, -1 between
    /// adjacent colors, 0 otherwise.
    pub fn gcm(&self) -> Gcm {
        let k = self.names.len();
        let rows = (0..k)
            .map(|i| {
                (0..k)
                    .map(|j| {
                        if i == j {
                            2
                        } else if self.adj[i][j] {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        Gcm { rows }
    }
}

/// Symmetric generalized Cartan matrix of a simple graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Gcm {
    rows: Vec<Vec<i64>>,
}

impl Gcm {
    pub fn entry(&self, a: Color, b: Color) -> i64 {
        self.rows[a.0][b.0]
    }

    pub fn row(&self, a: Color) -> &[i64] {
        &self.rows[a.0]
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

impl fmt::Display for Gcm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}
