//! Union-find with path halving and union by size.

#[derive(Clone, Debug)]
pub struct DisjointSets {
    parent: Vec<usize>,
    size: Vec<usize>,
}

impl DisjointSets {
    pub fn new(n: usize) -> Self {
        DisjointSets {
            parent: (0..n).collect(),
            size: vec![1; n],
        }
    }

    pub fn find(&mut self, mut i: usize) -> usize {
        while self.parent[i] != i {
            self.parent[i] = self.parent[self.parent[i]];
            i = self.parent[i];
        }
        i
    }

    pub fn union(&mut self, i: usize, j: usize) -> bool {
        let (mut ri, mut rj) = (self.find(i), self.find(j));
        if ri == rj {
            return false;
        }
        if self.size[ri] < self.size[rj] {
            std::mem::swap(&mut ri, &mut rj);
        }
        self.parent[rj] = ri;
        self.size[ri] += self.size[rj];
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn merges() {
        let mut d = DisjointSets::new(5);
        assert!(d.union(0, 1));
        assert!(d.union(3, 4));
        assert!(!d.union(1, 0));
        assert_eq!(d.find(0), d.find(1));
        assert_ne!(d.find(0), d.find(3));
        d.union(1, 4);
        assert_eq!(d.find(0), d.find(3));
    }
}
