use num_rational::Ratio;

/// An affine functional `x ↦ <gradient, x> + constant`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineFunctional {
    pub gradient: Vec<i64>,
    pub constant: Ratio<i64>,
}

impl AffineFunctional {
    pub fn eval(&self, x: &[Ratio<i64>]) -> Ratio<i64> {
        assert_eq!(x.len(), self.gradient.len());
        self.gradient
            .iter()
            .zip(x)
            .fold(self.constant, |acc, (&g, &xi)| acc + xi * g)
    }

    /// The simple functionals `a_0 = 1/2 - x_1`, `a_i = x_i - x_{i+1}`,
    /// `a_n = x_n` cutting out the base alcove.
    pub fn simple(rank: usize) -> Vec<AffineFunctional> {
        let n = rank;
        let unit = |i: usize| -> Vec<i64> {
            let mut v = vec![0; n];
            v[i] = 1;
            v
        };
        let mut out = Vec::with_capacity(n + 1);
        let mut a0 = vec![0; n];
        a0[0] = -1;
        out.push(AffineFunctional {
            gradient: a0,
            constant: Ratio::new(1, 2),
        });
        for i in 0..n.saturating_sub(1) {
            let mut g = unit(i);
            g[i + 1] = -1;
            out.push(AffineFunctional {
                gradient: g,
                constant: Ratio::from_integer(0),
            });
        }
        out.push(AffineFunctional {
            gradient: unit(n - 1),
            constant: Ratio::from_integer(0),
        });
        out
    }
}
