use std::collections::BTreeMap;

use super::Partition;

/// Littlewood–Richardson coefficients `c^ν_{λμ}` for all `ν` with a nonzero
/// coefficient, by counting LR tableaux of shape `ν/λ` and content `μ`.
pub fn lr_coeffs(lambda: &Partition, mu: &Partition) -> BTreeMap<Partition, u64> {
    let n = lambda.size() + mu.size();
    let mut out = BTreeMap::new();
    for nu in Partition::all(n) {
        if !nu.contains(lambda) {
            continue;
        }
        let c = count_tableaux(lambda, mu, &nu);
        if c > 0 {
            out.insert(nu, c);
        }
    }
    out
}

/// Single coefficient, zero when the sizes do not match.
pub fn lr_coeff(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if nu.size() != lambda.size() + mu.size() || !nu.contains(lambda) {
        return 0;
    }
    count_tableaux(lambda, mu, nu)
}

struct Search<'a> {
    lambda: &'a Partition,
    nu: &'a Partition,
    content: Vec<usize>,
    cells: Vec<(usize, usize)>,
    filling: Vec<Vec<usize>>,
    used: Vec<usize>,
}

/// Cells are filled in reverse reading order (rows top to bottom, each row
/// right to left), so the lattice condition is checked on every prefix.
fn count_tableaux(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    let mut cells = Vec::new();
    for r in 0..nu.len() {
        for c in (lambda.part(r + 1)..nu.part(r + 1)).rev() {
            cells.push((r, c));
        }
    }
    let mut search = Search {
        lambda,
        nu,
        content: mu.parts().to_vec(),
        filling: nu.parts().iter().map(|&p| vec![0; p]).collect(),
        cells,
        used: vec![0; mu.len()],
    };
    search.run(0)
}

impl Search<'_> {
    fn run(&mut self, idx: usize) -> u64 {
        if idx == self.cells.len() {
            return 1;
        }
        let (r, c) = self.cells[idx];
        let mut total = 0;
        for k in 0..self.content.len() {
            if self.used[k] == self.content[k] {
                continue;
            }
            if k > 0 && self.used[k] + 1 > self.used[k - 1] {
                continue;
            }
            // weakly increasing along the row
            if c + 1 < self.nu.part(r + 1) && k > self.filling[r][c + 1] {
                continue;
            }
            // strictly increasing down the column, only against skew cells
            if r > 0 && c >= self.lambda.part(r) && k <= self.filling[r - 1][c] {
                continue;
            }
            self.filling[r][c] = k;
            self.used[k] += 1;
            total += self.run(idx + 1);
            self.used[k] -= 1;
        }
        total
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Partition {
        text.parse().unwrap()
    }

    #[test]
    fn pieri_examples() {
        let boxes = lr_coeffs(&p("1"), &p("1"));
        assert_eq!(boxes, BTreeMap::from([(p("2"), 1), (p("1,1"), 1)]));
        let col = lr_coeffs(&p("1,1"), &p("1"));
        assert_eq!(col, BTreeMap::from([(p("2,1"), 1), (p("1,1,1"), 1)]));
        let mixed = lr_coeffs(&p("2,1"), &p("1"));
        assert_eq!(mixed, BTreeMap::from([(p("3,1"), 1), (p("2,2"), 1), (p("2,1,1"), 1)]));
        assert_eq!(lr_coeff(&p("1"), &p("1"), &p("3")), 0);
    }

    #[test]
    fn classic_coefficient() {
        assert_eq!(lr_coeff(&p("2,1"), &p("2,1"), &p("4,2")), 1);
        assert_eq!(lr_coeff(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
    }

    #[test]
    fn symmetric_in_arguments() {
        for a in 0..=3 {
            for b in 0..=3 {
                for l in Partition::all(a) {
                    for m in Partition::all(b) {
                        assert_eq!(lr_coeffs(&l, &m), lr_coeffs(&m, &l), "{l} {m}");
                    }
                }
            }
        }
    }
}
