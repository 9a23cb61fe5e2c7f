use super::{RamificationData, Q};

/// The modified Hasse–Herbrand function 𝔰(u) = ∫_0^u |G[t]|/e dt with
/// G[t] = G[⌈t⌉], stored as the orders g_1, g_2, … (eventually 1).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HerbrandFunction {
    e: i64,
    /// orders[t-1] = |G[t]| for t = 1..=last jump; beyond that |G[t]| = 1.
    orders: Vec<i64>,
}

impl HerbrandFunction {
    pub fn new(e: i64, orders: Vec<i64>) -> Self {
        let mut orders = orders;
        while orders.last() == Some(&1) {
            orders.pop();
        }
        HerbrandFunction { e, orders }
    }

    pub fn from_data(r: &RamificationData) -> Self {
        let top = r.max_i();
        let orders = (1..=top).map(|t| r.i.iter().filter(|v| v.is_none_or(|x| x >= t)).count() as i64).collect();
        Self::new(r.e as i64, orders)
    }

    pub fn e(&self) -> i64 {
        self.e
    }

    /// |G[t]| for integer t ≥ 1.
    pub fn order_at(&self, t: i64) -> i64 {
        if t >= 1 && (t as usize) <= self.orders.len() {
            self.orders[t as usize - 1]
        } else {
            1
        }
    }

    /// Closed form (1/e)(g_1 + ⋯ + g_m + g_{m+1}(u − m)), m = ⌊u⌋.
    pub fn eval(&self, u: Q) -> Q {
        assert!(u >= Q::from_integer(0), "𝔰 is defined on u ≥ 0");
        let m = u.floor().to_integer();
        let last = self.orders.len() as i64;
        let full: i64 = self.orders.iter().take(m.min(last) as usize).sum::<i64>() + (m - last).max(0);
        (Q::from_integer(full) + Q::from_integer(self.order_at(m + 1)) * (u - Q::from_integer(m))) / self.e
    }

    /// The inverse of 𝔰 on [0, ∞).
    pub fn inverse(&self, v: Q) -> Q {
        assert!(v >= Q::from_integer(0), "𝔰⁻¹ is defined on v ≥ 0");
        let mut acc = Q::from_integer(0);
        let mut m = 0i64;
        loop {
            let g = self.order_at(m + 1);
            let step = Q::new(g, self.e);
            if m as usize >= self.orders.len() || acc + step >= v {
                return Q::from_integer(m) + (v - acc) / step;
            }
            acc += step;
            m += 1;
        }
    }

    /// Break points (u, 𝔰(u)) where the slope changes, starting at 0.
    pub fn breaks(&self) -> Vec<(Q, Q)> {
        let mut out = vec![(Q::from_integer(0), Q::from_integer(0))];
        for t in 1..=self.orders.len() as i64 {
            if self.order_at(t + 1) != self.order_at(t) {
                let u = Q::from_integer(t);
                out.push((u, self.eval(u)));
            }
        }
        out
    }

    /// Slope after each break point.
    pub fn slopes(&self) -> Vec<Q> {
        self.breaks().iter().map(|(u, _)| Q::new(self.order_at(u.to_integer() + 1), self.e)).collect()
    }
}

/// (1/e)·Σ_σ min(i_G(σ), u), with the identity contributing u.
pub fn sfun_sum(r: &RamificationData, u: Q) -> Q {
    let total: Q = r.i.iter().map(|v| v.map_or(u, |x| u.min(Q::from_integer(x)))).sum();
    total / r.e as i64
}

/// The classical φ_{L/K}(v) = ∫_0^v dt/(G_0 : G_t) with G_t = {i_G ≥ t + 1},
/// extended by φ(v) = v on [−1, 0].
pub fn classical_phi(r: &RamificationData, v: Q) -> Q {
    let zero = Q::from_integer(0);
    if v <= zero {
        return v;
    }
    let g0 = r.inertia.len() as i64;
    let order = |m: i64| r.i.iter().filter(|x| x.is_none_or(|y| y > m)).count() as i64;
    let mut acc = zero;
    let mut m = 1i64;
    // G_t = G_m for t in (m − 1, m]
    while Q::from_integer(m - 1) < v {
        let hi = v.min(Q::from_integer(m));
        acc += (hi - Q::from_integer(m - 1)) * Q::new(order(m), g0);
        m += 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flagship_values() {
        // i_G = {∞, 2, 4, 2}, e = 2
        let h = HerbrandFunction::new(2, vec![4, 4, 2, 2]);
        assert_eq!(h.eval(Q::from_integer(4)), Q::from_integer(6));
        assert_eq!(h.eval(Q::from_integer(2)), Q::from_integer(4));
        assert_eq!(h.eval(Q::from_integer(5)), Q::new(13, 2));
        assert_eq!(h.inverse(Q::from_integer(6)), Q::from_integer(4));
        assert_eq!(h.inverse(Q::new(13, 2)), Q::from_integer(5));
        assert_eq!(h.breaks(), vec![(Q::from(0), Q::from(0)), (Q::from(2), Q::from(4)), (Q::from(4), Q::from(6))]);
        assert_eq!(h.slopes(), vec![Q::from(2), Q::from(1), Q::new(1, 2)]);
    }

    #[test]
    fn inverse_round_trips() {
        let h = HerbrandFunction::new(3, vec![3, 3, 3]);
        for k in 0..40 {
            let u = Q::new(k, 3);
            assert_eq!(h.inverse(h.eval(u)), u);
        }
    }
}
