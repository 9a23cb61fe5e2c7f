use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

/// Multiplication table on indices 0..n; index 0 is the identity and
/// `t[a][b]` is the index of a∘b.
pub type Table = Vec<Vec<usize>>;

/// A finite abelian group presented as a product of cyclic factors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GroupSpec {
    Cyclic(u64),
    Product(Vec<u64>),
}

impl GroupSpec {
    /// Parses "cyclic:4" or "product:2,2".
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::invalid("group", format!("expected cyclic:N or product:A,B,…, got {s:?}"));
        let (kind, rest) = s.split_once(':').ok_or_else(bad)?;
        let nums: Vec<u64> = rest.split(',').map(|x| x.trim().parse::<u64>()).collect::<std::result::Result<_, _>>().map_err(|_| bad())?;
        if nums.is_empty() || nums.contains(&0) {
            return Err(bad());
        }
        match kind.trim() {
            "cyclic" if nums.len() == 1 => Ok(GroupSpec::Cyclic(nums[0])),
            "product" => Ok(GroupSpec::Product(nums)),
            _ => Err(bad()),
        }
    }

    pub fn factors(&self) -> Vec<u64> {
        match self {
            GroupSpec::Cyclic(n) => vec![*n],
            GroupSpec::Product(v) => v.clone(),
        }
    }

    pub fn order(&self) -> u64 {
        self.factors().iter().product()
    }

    /// Number of elements of each order.
    pub fn order_profile(&self) -> BTreeMap<u64, usize> {
        let fs = self.factors();
        let mut out = BTreeMap::new();
        let mut idx = vec![0u64; fs.len()];
        loop {
            let ord = idx.iter().zip(&fs).fold(1u64, |acc, (&i, &m)| {
                let o = m / num_integer::gcd(i, m);
                num_integer::lcm(acc, o)
            });
            *out.entry(ord).or_insert(0) += 1;
            let mut k = 0;
            loop {
                if k == fs.len() {
                    return out;
                }
                idx[k] += 1;
                if idx[k] < fs[k] {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
        }
    }
}

impl fmt::Display for GroupSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSpec::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSpec::Product(v) => {
                let parts: Vec<String> = v.iter().map(|x| x.to_string()).collect();
                write!(f, "product:{}", parts.join(","))
            }
        }
    }
}

pub fn element_order(t: &Table, g: usize) -> u64 {
    let mut x = g;
    let mut k = 1;
    while x != 0 {
        x = t[x][g];
        k += 1;
    }
    k
}

pub fn order_profile(t: &Table) -> BTreeMap<u64, usize> {
    let mut out = BTreeMap::new();
    for g in 0..t.len() {
        *out.entry(element_order(t, g)).or_insert(0) += 1;
    }
    out
}

pub fn inverse(t: &Table, g: usize) -> usize {
    t[g].iter().position(|&x| x == 0).expect("group element without inverse")
}

pub fn is_abelian(t: &Table) -> bool {
    (0..t.len()).all(|a| (0..t.len()).all(|b| t[a][b] == t[b][a]))
}

/// Identity, closure, inverses and associativity.
pub fn verify_group(t: &Table) -> Result<()> {
    let n = t.len();
    let fail = |m: String| Err(Error::ActionNotClosed(m));
    for a in 0..n {
        if t[0][a] != a || t[a][0] != a {
            return fail(format!("element 0 is not an identity for element {a}"));
        }
        let row: BTreeSet<usize> = t[a].iter().copied().collect();
        if row.len() != n || t[a].iter().any(|&x| x >= n) {
            return fail(format!("row {a} is not a permutation"));
        }
    }
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                if t[t[a][b]][c] != t[a][t[b][c]] {
                    return fail(format!("associativity fails at ({a}, {b}, {c})"));
                }
            }
        }
    }
    Ok(())
}

pub fn closure(t: &Table, gens: &[usize]) -> Vec<usize> {
    let mut set: BTreeSet<usize> = BTreeSet::from([0]);
    let mut frontier: Vec<usize> = vec![0];
    while let Some(x) = frontier.pop() {
        for &g in gens {
            let y = t[x][g];
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set.into_iter().collect()
}

/// All subgroups, sorted by order and then by elements.
pub fn subgroups(t: &Table) -> Vec<Vec<usize>> {
    let n = t.len();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier: Vec<Vec<usize>> = vec![vec![0]];
    found.insert(vec![0]);
    while let Some(h) = frontier.pop() {
        for g in 0..n {
            if h.contains(&g) {
                continue;
            }
            let mut gens = h.clone();
            gens.push(g);
            let s = closure(t, &gens);
            if found.insert(s.clone()) {
                frontier.push(s);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    out
}

pub fn is_normal(t: &Table, h: &[usize]) -> bool {
    (0..t.len()).all(|g| {
        let gi = inverse(t, g);
        h.iter().all(|&x| h.contains(&t[t[g][x]][gi]))
    })
}

/// Left cosets gH, ordered by their smallest element.
pub fn cosets(t: &Table, h: &[usize]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; t.len()];
    let mut out = Vec::new();
    for g in 0..t.len() {
        if seen[g] {
            continue;
        }
        let mut c: Vec<usize> = h.iter().map(|&x| t[g][x]).collect();
        c.sort();
        for &x in &c {
            seen[x] = true;
        }
        out.push(c);
    }
    out
}

/// Table of G/H on coset indices (H normal).
pub fn quotient_table(t: &Table, cosets: &[Vec<usize>]) -> Table {
    let which = |g: usize| cosets.iter().position(|c| c.contains(&g)).unwrap();
    cosets.iter().map(|a| cosets.iter().map(|b| which(t[a[0]][b[0]])).collect()).collect()
}

/// Cyclic-factor structure of an abelian p-group from its table.
pub fn structure(t: &Table, p: u64) -> Result<GroupSpec> {
    if !is_abelian(t) {
        return Err(Error::NotAbelian);
    }
    let n = t.len() as u64;
    if (0..t.len()).any(|g| element_order(t, g) == n) {
        return Ok(GroupSpec::Cyclic(n));
    }
    // c_k = #{g : g^{p^k} = 1} = p^{Σ_i min(k, a_i)}
    let orders: Vec<u64> = (0..t.len()).map(|g| element_order(t, g)).collect();
    let logp = |mut x: u64| {
        let mut k = 0;
        while x > 1 {
            x /= p;
            k += 1;
        }
        k
    };
    let mut counts = vec![0u32];
    let mut k = 1;
    loop {
        let pk = p.pow(k);
        let c = orders.iter().filter(|&&o| pk % o == 0).count() as u64;
        counts.push(logp(c));
        if c == n {
            break;
        }
        k += 1;
    }
    // d_k = #{i : a_i ≥ k}
    let d: Vec<u32> = counts.windows(2).map(|w| w[1] - w[0]).collect();
    let mut factors = Vec::new();
    for (k, w) in d.windows(2).enumerate() {
        for _ in 0..(w[0] - w[1]) {
            factors.push(p.pow(k as u32 + 1));
        }
    }
    for _ in 0..*d.last().unwrap() {
        factors.push(p.pow(d.len() as u32));
    }
    factors.sort_unstable_by(|a, b| b.cmp(a));
    Ok(if factors.len() == 1 { GroupSpec::Cyclic(factors[0]) } else { GroupSpec::Product(factors) })
}
