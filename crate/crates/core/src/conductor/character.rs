use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::extension::{group, Table};

/// A degree-one character χ: G → ℤ/d, stored as χ(σ) for every index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Character {
    pub values: Vec<u64>,
    pub modulus: u64,
}

impl Character {
    pub fn new(t: &Table, values: Vec<u64>, modulus: u64) -> Result<Self> {
        if values.len() != t.len() || modulus == 0 {
            return Err(Error::invalid("character", "one value per group element is required"));
        }
        let values: Vec<u64> = values.iter().map(|v| v % modulus).collect();
        for a in 0..t.len() {
            for b in 0..t.len() {
                if values[t[a][b]] != (values[a] + values[b]) % modulus {
                    return Err(Error::NotDegreeOne);
                }
            }
        }
        Ok(Character { values, modulus })
    }

    /// χ(ρ^k) = k mod n for the first element ρ of maximal order.
    pub fn faithful(t: &Table) -> Result<Self> {
        let n = t.len() as u64;
        let rho = (0..t.len())
            .find(|&g| group::element_order(t, g) == n)
            .ok_or_else(|| Error::Unsupported("a non-cyclic group has no faithful degree-one character".into()))?;
        let mut values = vec![0; t.len()];
        let mut x = 0;
        for k in 0..n {
            values[x] = k;
            x = t[x][rho];
        }
        Self::new(t, values, n)
    }

    /// Every degree-one character, with values in ℤ/exponent.
    pub fn all(t: &Table) -> Result<Vec<Self>> {
        if !group::is_abelian(t) {
            return Err(Error::NotAbelian);
        }
        let exp = (0..t.len()).map(|g| group::element_order(t, g)).fold(1, num_integer::lcm);
        let mut gens: Vec<usize> = Vec::new();
        while group::closure(t, &gens).len() < t.len() {
            let span = group::closure(t, &gens);
            let g = (0..t.len()).filter(|g| !span.contains(g)).max_by_key(|&g| group::element_order(t, g)).unwrap();
            gens.push(g);
        }
        let mut found: BTreeSet<Vec<u64>> = BTreeSet::new();
        let mut assign = vec![0u64; gens.len()];
        loop {
            if let Some(vals) = extend(t, &gens, &assign, exp) {
                found.insert(vals);
            }
            let mut k = 0;
            loop {
                if k == assign.len() {
                    return Ok(found.into_iter().map(|v| Character { values: v, modulus: exp }).collect());
                }
                assign[k] += 1;
                if assign[k] < exp {
                    break;
                }
                assign[k] = 0;
                k += 1;
            }
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.values.iter().all(|&v| v == 0)
    }

    pub fn is_trivial_on(&self, set: &[usize]) -> bool {
        set.iter().all(|&s| self.values[s] == 0)
    }

    pub fn kernel(&self) -> Vec<usize> {
        (0..self.values.len()).filter(|&s| self.values[s] == 0).collect()
    }

    pub fn is_faithful(&self) -> bool {
        self.kernel() == vec![0]
    }

    /// Order of χ in the character group.
    pub fn order(&self) -> u64 {
        let g = self.values.iter().fold(self.modulus, |acc, &v| num_integer::gcd(acc, v));
        self.modulus / g
    }

    pub fn power(&self, k: u64) -> Self {
        Character { values: self.values.iter().map(|v| v * k % self.modulus).collect(), modulus: self.modulus }
    }

    /// The character induced on G/ker-containing quotient with the given cosets.
    pub fn on_quotient(&self, cosets: &[Vec<usize>]) -> Result<Self> {
        let mut values = Vec::with_capacity(cosets.len());
        for c in cosets {
            let v = self.values[c[0]];
            if c.iter().any(|&s| self.values[s] != v) {
                return Err(Error::invalid("character", "not trivial on the subgroup"));
            }
            values.push(v);
        }
        Ok(Character { values, modulus: self.modulus })
    }
}

fn extend(t: &Table, gens: &[usize], assign: &[u64], m: u64) -> Option<Vec<u64>> {
    let mut vals: Vec<Option<u64>> = vec![None; t.len()];
    vals[0] = Some(0);
    let mut frontier = vec![0];
    while let Some(x) = frontier.pop() {
        for (g, &a) in gens.iter().zip(assign) {
            let y = t[x][*g];
            let v = (vals[x].unwrap() + a) % m;
            match vals[y] {
                None => {
                    vals[y] = Some(v);
                    frontier.push(y);
                }
                Some(w) if w != v => return None,
                _ => {}
            }
        }
    }
    let vals: Vec<u64> = vals.into_iter().map(|v| v.unwrap()).collect();
    Character::new(t, vals.clone(), m).ok().map(|_| vals)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(n: usize) -> Table {
        (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect()
    }

    #[test]
    fn characters_of_cyclic_and_klein() {
        let t = cyclic(4);
        let chi = Character::faithful(&t).unwrap();
        assert_eq!(chi.values, vec![0, 1, 2, 3]);
        assert!(chi.is_faithful());
        assert_eq!(chi.power(2).kernel(), vec![0, 2]);
        assert_eq!(Character::all(&t).unwrap().len(), 4);
        let klein: Table = (0..4).map(|a| (0..4).map(|b| a ^ b).collect()).collect();
        assert_eq!(Character::all(&klein).unwrap().len(), 4);
        assert!(Character::faithful(&klein).is_err());
        assert!(matches!(Character::new(&t, vec![0, 1, 1, 1], 4), Err(Error::NotDegreeOne)));
    }
}
