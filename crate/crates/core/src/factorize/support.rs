use std::fmt;

/// A set partition of `{1, …, n}`: the orbits of the group generated by the
/// cycles applied so far.
///
/// Stored as a restricted-growth string: `labels[x]` is the index of the
/// block containing point `x` (0-based), with blocks numbered in order of
/// their minimum element. That makes equal partitions compare equal.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SupportPartition {
    labels: Vec<u8>,
}

impl SupportPartition {
    /// The partition into singletons.
    pub fn discrete(n: usize) -> Self {
        assert!(n <= u8::MAX as usize);
        SupportPartition {
            labels: (0..n as u8).collect(),
        }
    }

    pub(crate) fn from_labels(labels: Vec<u8>) -> Self {
        let mut s = SupportPartition { labels };
        s.normalize();
        s
    }

    fn normalize(&mut self) {
        let mut map = [u8::MAX; 256];
        let mut next = 0u8;
        for l in self.labels.iter_mut() {
            if map[*l as usize] == u8::MAX {
                map[*l as usize] = next;
                next += 1;
            }
            *l = map[*l as usize];
        }
    }

    pub fn degree(&self) -> usize {
        self.labels.len()
    }

    pub(crate) fn label0(&self, x: usize) -> usize {
        self.labels[x] as usize
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    pub fn is_transitive(&self) -> bool {
        self.num_blocks() <= 1
    }

    /// Joins every block that meets `points` (0-based) into one.
    pub(crate) fn merge0(&self, points: &[usize]) -> SupportPartition {
        let Some(&first) = points.first() else {
            return self.clone();
        };
        let target = self.labels[first];
        let mut hit = [false; 256];
        for &x in points {
            hit[self.labels[x] as usize] = true;
        }
        let labels = self
            .labels
            .iter()
            .map(|&l| if hit[l as usize] { target } else { l })
            .collect();
        SupportPartition::from_labels(labels)
    }

    /// Joins every block meeting the given 1-based points.
    pub fn merge(&self, points: &[usize]) -> SupportPartition {
        let zero: Vec<usize> = points.iter().map(|&x| x - 1).collect();
        self.merge0(&zero)
    }

    /// Blocks as sorted 1-based point lists, ordered by minimum element.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (x, &l) in self.labels.iter().enumerate() {
            out[l as usize].push(x + 1);
        }
        out
    }
}

impl fmt::Debug for SupportPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let blocks: Vec<String> = self
            .blocks()
            .iter()
            .map(|b| {
                let inner: Vec<String> = b.iter().map(|x| x.to_string()).collect();
                format!("{{{}}}", inner.join(","))
            })
            .collect();
        write!(f, "{}", blocks.join(""))
    }
}
