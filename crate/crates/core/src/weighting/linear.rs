use num_rational::BigRational;
use num_traits::{One, Zero};

/// A linear system kept in reduced row echelon form as equations arrive.
pub(crate) struct System {
    cols: usize,
    rows: Vec<Vec<BigRational>>,
    rhs: Vec<BigRational>,
    pivots: Vec<usize>,
}

impl System {
    pub fn new(cols: usize) -> Self {
        System { cols, rows: Vec::new(), rhs: Vec::new(), pivots: Vec::new() }
    }

    #[cfg(test)]
    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Adds `row . x = rhs`. Returns false when the system becomes inconsistent.
    pub fn push(&mut self, mut row: Vec<BigRational>, mut rhs: BigRational) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        for (i, &p) in self.pivots.iter().enumerate() {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&self.rows[i]) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            rhs -= &f * &self.rhs[i];
        }
        let Some(p) = row.iter().position(|x| !x.is_zero()) else {
            return rhs.is_zero();
        };
        let lead = row[p].clone();
        if !lead.is_one() {
            for x in row.iter_mut() {
                *x /= &lead;
            }
            rhs /= &lead;
        }
        for i in 0..self.rows.len() {
            if self.rows[i][p].is_zero() {
                continue;
            }
            let f = self.rows[i][p].clone();
            for (x, y) in self.rows[i].iter_mut().zip(&row) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
            let d = &f * &rhs;
            self.rhs[i] -= d;
        }
        self.rows.push(row);
        self.rhs.push(rhs);
        self.pivots.push(p);
        true
    }

    /// The solution with every free variable set to zero.
    pub fn solution(&self) -> Vec<BigRational> {
        let mut x = vec![BigRational::zero(); self.cols];
        for (i, &p) in self.pivots.iter().enumerate() {
            x[p] = self.rhs[i].clone();
        }
        x
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn row(v: &[i64]) -> Vec<BigRational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn solves_and_detects_contradictions() {
        let mut s = System::new(3);
        assert!(s.push(row(&[1, 1, 0]), int(1)));
        assert!(s.push(row(&[0, 1, 1]), int(1)));
        assert!(s.push(row(&[1, 2, 1]), int(2)));
        assert_eq!(s.rank(), 2);
        let x = s.solution();
        assert_eq!(&x[0] + &x[1], int(1));
        assert_eq!(&x[1] + &x[2], int(1));
        assert!(!s.push(row(&[1, 0, -1]), int(1)));
    }

    #[test]
    fn fractional_solution() {
        let mut s = System::new(2);
        assert!(s.push(row(&[2, 0]), int(1)));
        assert!(s.push(row(&[1, 3]), int(2)));
        assert_eq!(s.solution(), vec![BigRational::new(1.into(), 2.into()), BigRational::new(1.into(), 2.into())]);
    }
}
