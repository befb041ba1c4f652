use std::fmt;

use super::Partition;

/// A labelling of the cells of a diagram by `1..=n`, increasing along rows
/// and down columns.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    /// Checks the labelling; `None` if it is not standard.
    pub fn new(rows: Vec<Vec<usize>>) -> Option<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect()).ok()?;
        if shape.len() != rows.len() {
            return None;
        }
        let n = shape.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in rows.iter().enumerate() {
            for (c, &x) in row.iter().enumerate() {
                if x == 0 || x > n || seen[x] {
                    return None;
                }
                seen[x] = true;
                if c > 0 && row[c - 1] >= x {
                    return None;
                }
                if r > 0 && rows[r - 1][c] >= x {
                    return None;
                }
            }
        }
        Some(StandardTableau { shape, rows })
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, row: usize, col: usize) -> Option<usize> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// Every standard tableau of the given shape, built by placing `1, 2, ...`
    /// at addable corners.
    pub fn all(shape: &Partition) -> Vec<StandardTableau> {
        let mut out = Vec::new();
        let mut rows: Vec<Vec<usize>> = vec![Vec::new(); shape.len()];
        grow(shape, &mut rows, 1, &mut out);
        out
    }
}

fn grow(shape: &Partition, rows: &mut Vec<Vec<usize>>, next: usize, out: &mut Vec<StandardTableau>) {
    if next > shape.size() {
        out.push(StandardTableau { shape: shape.clone(), rows: rows.clone() });
        return;
    }
    for r in 0..rows.len() {
        let len = rows[r].len();
        let fits_row = len < shape.parts()[r];
        let fits_col = r == 0 || rows[r - 1].len() > len;
        if fits_row && fits_col {
            rows[r].push(next);
            grow(shape, rows, next + 1, out);
            rows[r].pop();
        }
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", lines.join(" / "))
    }
}

/// Number of standard tableaux of shape `λ`, by enumeration.
pub fn d_lambda(lambda: &Partition) -> u64 {
    StandardTableau::all(lambda).len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hook_formula(l: &Partition) -> u64 {
        let conj = l.conjugate();
        let mut num: u64 = (1..=l.size() as u64).product();
        let mut den: u64 = 1;
        for (r, c) in l.cells() {
            den *= (l.parts()[r] - c + conj.parts()[c] - r - 1) as u64;
        }
        num /= den;
        num
    }

    #[test]
    fn small_counts() {
        assert_eq!(d_lambda(&"4".parse().unwrap()), 1);
        assert_eq!(d_lambda(&"2,1".parse().unwrap()), 2);
        assert_eq!(d_lambda(&Partition::empty()), 1);
        let total: u64 = Partition::all(4).iter().map(|l| d_lambda(l).pow(2)).sum();
        assert_eq!(total, 24);
    }

    #[test]
    fn hook_lengths_agree() {
        for n in 0..=8 {
            for l in Partition::all(n) {
                assert_eq!(d_lambda(&l), hook_formula(&l), "{l}");
            }
        }
    }

    #[test]
    fn tableaux_are_standard() {
        for t in StandardTableau::all(&"3,2".parse().unwrap()) {
            assert_eq!(StandardTableau::new(t.rows().to_vec()).as_ref(), Some(&t));
        }
        assert!(StandardTableau::new(vec![vec![2, 1]]).is_none());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![2]]).is_some());
        assert!(StandardTableau::new(vec![vec![1, 2], vec![3, 4], vec![5]]).is_some());
        assert!(StandardTableau::new(vec![vec![1, 3], vec![4, 2]]).is_none());
    }
}
