use crate::error::{Error, Result};

pub const DEFAULT_PARTITION_BOUND: usize = 8;

/// A box `(i, j)` of a Young diagram with its arm, leg and hook lengths.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Cell {
    pub i: usize,
    pub j: usize,
    pub arm: usize,
    pub leg: usize,
    pub hook: usize,
}

/// Integer partition `λ_1 >= ... >= λ_k > 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<usize>,
    cells: Vec<Cell>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Partition {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        let conj: Vec<usize> = (1..=parts.first().copied().unwrap_or(0))
            .map(|j| parts.iter().filter(|&&p| p >= j).count())
            .collect();
        let mut cells = Vec::new();
        for (i0, &row) in parts.iter().enumerate() {
            for j in 1..=row {
                let arm = row - j;
                let leg = conj[j - 1] - (i0 + 1);
                cells.push(Cell {
                    i: i0 + 1,
                    j,
                    arm,
                    leg,
                    hook: arm + leg + 1,
                });
            }
        }
        Partition { parts, cells }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }
}

/// All partitions of `n`, largest first in lexicographic order.
pub fn partitions_of(n: usize, bound: usize) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "partition size",
            value: n,
            bound,
        });
    }
    fn rec(left: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if left == 0 {
            out.push(Partition::new(cur.clone()));
            return;
        }
        for p in (1..=left.min(max)).rev() {
            cur.push(p);
            rec(left - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_partitions() {
        let ps: Vec<Vec<usize>> = partitions_of(3, 8).unwrap().iter().map(|p| p.parts().to_vec()).collect();
        assert_eq!(ps, vec![vec![3], vec![2, 1], vec![1, 1, 1]]);
        let empty = partitions_of(0, 8).unwrap();
        assert_eq!(empty.len(), 1);
        assert!(empty[0].parts().is_empty());
        assert!(matches!(partitions_of(9, 8), Err(Error::BoundExceeded { .. })));
        let counts: Vec<usize> = (0..=8).map(|n| partitions_of(n, 8).unwrap().len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22]);
    }

    #[test]
    fn hooks() {
        let p = Partition::new(vec![2, 1]);
        let h: Vec<(usize, usize, usize)> = p.cells().iter().map(|c| (c.i, c.j, c.hook)).collect();
        assert_eq!(h, vec![(1, 1, 3), (1, 2, 1), (2, 1, 1)]);
        let c = p.cells()[0];
        assert_eq!((c.arm, c.leg), (1, 1));
        // hook lengths of (3,1): 4,2,1,1
        let q = Partition::new(vec![3, 1]);
        let hs: Vec<usize> = q.cells().iter().map(|c| c.hook).collect();
        assert_eq!(hs, vec![4, 2, 1, 1]);
    }
}
