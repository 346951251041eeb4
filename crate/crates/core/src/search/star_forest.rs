//! Incremental star-forest tracking for one color class.
//!
//! Each component is a star, stored as a union-find set whose root carries the
//! component size and its center (`NO_CENTER` while the component is a single
//! vertex or a single edge). An edge may join a component only through an
//! isolated vertex, so every set stays flat: `parent[v]` is either `v` or the
//! root. Undo pops the last merge.

const NO_CENTER: u8 = u8::MAX;

#[derive(Clone, Debug)]
pub(crate) struct StarForest {
    parent: Vec<u8>,
    size: Vec<u8>,
    center: Vec<u8>,
    /// `(attached vertex, previous center of the root)` per merge.
    log: Vec<(u8, u8)>,
}

impl StarForest {
    pub(crate) fn new(vertices: usize) -> Self {
        assert!(vertices < NO_CENTER as usize, "too many vertices for the star-forest tracker");
        StarForest {
            parent: (0..vertices as u8).collect(),
            size: vec![1; vertices],
            center: vec![NO_CENTER; vertices],
            log: Vec::with_capacity(vertices),
        }
    }

    #[inline]
    fn root(&self, v: u8) -> u8 {
        self.parent[v as usize]
    }

    /// Adds the edge `{a, b}` if the class stays a star forest; returns whether
    /// it was added.
    #[inline]
    pub(crate) fn try_add(&mut self, a: u8, b: u8) -> bool {
        let (ra, rb) = (self.root(a), self.root(b));
        if ra == rb {
            return false;
        }
        let (sa, sb) = (self.size[ra as usize], self.size[rb as usize]);
        // One endpoint must be isolated; the other becomes (or already is) the center.
        let (leaf, hub, hub_root, hub_size) = if sa == 1 {
            (a, b, rb, sb)
        } else if sb == 1 {
            (b, a, ra, sa)
        } else {
            return false;
        };
        let old_center = self.center[hub_root as usize];
        if hub_size >= 3 && old_center != hub {
            return false;
        }
        self.parent[leaf as usize] = hub_root;
        self.size[hub_root as usize] += 1;
        self.center[hub_root as usize] = if hub_size == 1 { NO_CENTER } else { hub };
        self.log.push((leaf, old_center));
        true
    }

    /// Whether `try_add(a, b)` would succeed, without changing state.
    #[cfg(test)]
    pub(crate) fn can_add(&self, a: u8, b: u8) -> bool {
        let (ra, rb) = (self.root(a), self.root(b));
        if ra == rb {
            return false;
        }
        let (sa, sb) = (self.size[ra as usize], self.size[rb as usize]);
        let (hub, hub_root, hub_size) = if sa == 1 {
            (b, rb, sb)
        } else if sb == 1 {
            (a, ra, sa)
        } else {
            return false;
        };
        hub_size < 3 || self.center[hub_root as usize] == hub
    }

    /// Reverts the most recent successful `try_add`.
    #[inline]
    pub(crate) fn undo(&mut self) {
        let (leaf, old_center) = self.log.pop().expect("undo without a matching add");
        let root = self.parent[leaf as usize];
        self.size[root as usize] -= 1;
        self.center[root as usize] = old_center;
        self.parent[leaf as usize] = leaf;
    }
}
