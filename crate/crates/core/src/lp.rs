//! Dense simplex solver in dictionary form with Bland's anti-cycling rule.
//!
//! Problems are `min/max c'x` subject to rows `a'x <= b` or `a'x >= b` and
//! `x >= 0`. Infeasible starts go through a single-auxiliary-variable phase 1.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub const TOL_LP: f64 = 1e-7;
const PIVOT_EPS: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    Le,
    Ge,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Direction {
    Minimize,
    Maximize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LpProblem {
    pub objective: Vec<f64>,
    pub rows: Vec<Vec<f64>>,
    pub senses: Vec<Sense>,
    pub rhs: Vec<f64>,
    pub direction: Direction,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LpSolution {
    pub values: Vec<f64>,
    pub objective: f64,
    pub status: LpStatus,
    /// Largest constraint violation of `values`.
    pub max_residual: f64,
    pub pivots: usize,
}

impl LpProblem {
    pub fn new(direction: Direction, objective: Vec<f64>) -> Self {
        LpProblem {
            objective,
            rows: Vec::new(),
            senses: Vec::new(),
            rhs: Vec::new(),
            direction,
        }
    }

    pub fn constraint(mut self, row: Vec<f64>, sense: Sense, rhs: f64) -> Self {
        self.rows.push(row);
        self.senses.push(sense);
        self.rhs.push(rhs);
        self
    }

    fn validate(&self) -> Result<()> {
        let n = self.objective.len();
        if self.senses.len() != self.rows.len() || self.rhs.len() != self.rows.len() {
            return Err(Error::arg("rows, senses and rhs differ in length"));
        }
        if let Some(i) = self.rows.iter().position(|r| r.len() != n) {
            return Err(Error::arg(format!("row {i} has {} entries, expected {n}", self.rows[i].len())));
        }
        let finite = self.objective.iter().chain(self.rhs.iter()).chain(self.rows.iter().flatten()).all(|v| v.is_finite());
        if !finite {
            return Err(Error::arg("non-finite LP coefficient"));
        }
        Ok(())
    }

    /// Largest violation of the constraints and sign bounds at `x`.
    pub fn residual(&self, x: &[f64]) -> f64 {
        let mut worst = x.iter().map(|&v| (-v).max(0.0)).fold(0.0, f64::max);
        for ((row, &sense), &b) in self.rows.iter().zip(&self.senses).zip(&self.rhs) {
            let lhs: f64 = row.iter().zip(x).map(|(a, v)| a * v).sum();
            let viol = match sense {
                Sense::Le => lhs - b,
                Sense::Ge => b - lhs,
            };
            worst = worst.max(viol);
        }
        worst
    }
}

/// `x_basic[i] = b[i] - sum_j a[i][j] * x_nonbasic[j]`, `z = v + sum_j c[j] x_nonbasic[j]`.
struct Dictionary {
    a: Vec<Vec<f64>>,
    b: Vec<f64>,
    c: Vec<f64>,
    v: f64,
    basic: Vec<usize>,
    nonbasic: Vec<usize>,
    pivots: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Dictionary {
    fn pivot(&mut self, r: usize, e: usize) {
        let m = self.b.len();
        let are = self.a[r][e];
        let inv = 1.0 / are;
        self.b[r] *= inv;
        for (j, x) in self.a[r].iter_mut().enumerate() {
            if j == e {
                *x = inv;
            } else {
                *x *= inv;
            }
        }
        let pivot_row = self.a[r].clone();
        let br = self.b[r];
        for i in 0..m {
            if i == r {
                continue;
            }
            let aie = self.a[i][e];
            if aie == 0.0 {
                continue;
            }
            self.b[i] -= aie * br;
            let row = &mut self.a[i];
            for (j, x) in row.iter_mut().enumerate() {
                if j == e {
                    *x = -aie * inv;
                } else {
                    *x -= aie * pivot_row[j];
                }
            }
        }
        let ce = self.c[e];
        if ce != 0.0 {
            self.v += ce * br;
            for (j, x) in self.c.iter_mut().enumerate() {
                if j == e {
                    *x = -ce * inv;
                } else {
                    *x -= ce * pivot_row[j];
                }
            }
        }
        std::mem::swap(&mut self.basic[r], &mut self.nonbasic[e]);
        self.pivots += 1;
    }

    /// Bland's rule: lowest-index improving variable enters, ties in the
    /// ratio test leave by lowest index.
    fn run(&mut self, limit: usize) -> Result<Outcome> {
        loop {
            if self.pivots > limit {
                return Err(Error::Lp("stalled (iteration limit reached)"));
            }
            let entering = (0..self.c.len())
                .filter(|&j| self.c[j] > PIVOT_EPS)
                .min_by_key(|&j| self.nonbasic[j]);
            let Some(e) = entering else {
                return Ok(Outcome::Optimal);
            };
            let mut leave: Option<(f64, usize)> = None;
            for i in 0..self.b.len() {
                let aie = self.a[i][e];
                if aie > PIVOT_EPS {
                    let ratio = self.b[i].max(0.0) / aie;
                    let better = match leave {
                        None => true,
                        Some((best, r)) => {
                            ratio < best - PIVOT_EPS
                                || (ratio <= best + PIVOT_EPS && self.basic[i] < self.basic[r])
                        }
                    };
                    if better {
                        leave = Some((ratio, i));
                    }
                }
            }
            match leave {
                Some((_, r)) => self.pivot(r, e),
                None => return Ok(Outcome::Unbounded),
            }
        }
    }
}

pub fn lp_solve(problem: &LpProblem) -> Result<LpSolution> {
    problem.validate()?;
    let n = problem.objective.len();
    let m = problem.rows.len();
    let sign = match problem.direction {
        Direction::Maximize => 1.0,
        Direction::Minimize => -1.0,
    };
    // all rows as `a'x <= b`
    let mut a: Vec<Vec<f64>> = Vec::with_capacity(m);
    let mut b = Vec::with_capacity(m);
    for ((row, &sense), &rhs) in problem.rows.iter().zip(&problem.senses).zip(&problem.rhs) {
        match sense {
            Sense::Le => {
                a.push(row.clone());
                b.push(rhs);
            }
            Sense::Ge => {
                a.push(row.iter().map(|x| -x).collect());
                b.push(-rhs);
            }
        }
    }
    let c: Vec<f64> = problem.objective.iter().map(|x| sign * x).collect();
    let limit = 50 * (n + m) + 10_000;

    let mut dict = Dictionary {
        a,
        b,
        c: vec![0.0; n],
        v: 0.0,
        basic: (n..n + m).collect(),
        nonbasic: (0..n).collect(),
        pivots: 0,
    };

    let infeasible_start = dict.b.iter().any(|&x| x < -PIVOT_EPS);
    if infeasible_start {
        let aux = n + m;
        for row in dict.a.iter_mut() {
            row.push(-1.0);
        }
        dict.nonbasic.push(aux);
        dict.c = vec![0.0; n + 1];
        dict.c[n] = -1.0;
        let r = (0..m).min_by(|&i, &j| dict.b[i].total_cmp(&dict.b[j])).unwrap();
        dict.pivot(r, n);
        dict.run(limit)?;
        if dict.v < -TOL_LP {
            return Ok(LpSolution {
                values: vec![0.0; n],
                objective: f64::NAN,
                status: LpStatus::Infeasible,
                max_residual: f64::NAN,
                pivots: dict.pivots,
            });
        }
        if let Some(r) = dict.basic.iter().position(|&x| x == aux) {
            let e = (0..dict.nonbasic.len())
                .filter(|&j| dict.a[r][j].abs() > PIVOT_EPS)
                .max_by(|&i, &j| dict.a[r][i].abs().total_cmp(&dict.a[r][j].abs()));
            match e {
                Some(e) => dict.pivot(r, e),
                None => {
                    // row reads x0 = b_r with every coefficient zero; b_r is ~0
                    dict.a.remove(r);
                    dict.b.remove(r);
                    dict.basic.remove(r);
                }
            }
        }
        if let Some(col) = dict.nonbasic.iter().position(|&x| x == aux) {
            for row in dict.a.iter_mut() {
                row.remove(col);
            }
            dict.nonbasic.remove(col);
        }
    }

    // phase-2 objective in terms of the current nonbasic variables
    let width = dict.nonbasic.len();
    let mut obj = vec![0.0; width];
    let mut v = 0.0;
    for (j, &var) in dict.nonbasic.iter().enumerate() {
        if var < n {
            obj[j] += c[var];
        }
    }
    for (i, &var) in dict.basic.iter().enumerate() {
        if var < n && c[var] != 0.0 {
            v += c[var] * dict.b[i];
            for (o, &aij) in obj.iter_mut().zip(&dict.a[i]).take(width) {
                *o -= c[var] * aij;
            }
        }
    }
    dict.c = obj;
    dict.v = v;

    let outcome = dict.run(limit)?;
    if let Outcome::Unbounded = outcome {
        return Ok(LpSolution {
            values: vec![0.0; n],
            objective: sign * f64::INFINITY,
            status: LpStatus::Unbounded,
            max_residual: f64::NAN,
            pivots: dict.pivots,
        });
    }
    let mut values = vec![0.0; n];
    for (i, &var) in dict.basic.iter().enumerate() {
        if var < n {
            values[var] = dict.b[i].max(0.0);
        }
    }
    let objective = problem.objective.iter().zip(&values).map(|(c, x)| c * x).sum();
    Ok(LpSolution {
        max_residual: problem.residual(&values),
        values,
        objective,
        status: LpStatus::Optimal,
        pivots: dict.pivots,
    })
}
