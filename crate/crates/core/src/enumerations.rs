//! Enumerations: bijections between the positive indices `1, 2, 3, ...` and a
//! countable domain, evaluable in both directions, plus the combinators used
//! to build the canonical ones (`E`, `N0`, `Z`, `Q+`, `Q`).
//!
//! Combinators hold their parts behind `Arc`, so cloning an enumeration is
//! cheap and clones share any memoized state.

use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex};

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::One;

use crate::bijections::{self, GridPosition};
use crate::error::{Error, Result};
use crate::numbers::{Integer, Natural, Rational, Whole};

/// A bijection between positive indices and a domain of `Item`s.
pub trait Enumeration: Send + Sync {
    type Item: Clone + PartialEq + fmt::Debug + Send + Sync;

    /// Short name of the domain, used in diagnostics.
    fn label(&self) -> String;

    /// The element with index `n`.
    fn at(&self, n: &Natural) -> Self::Item;

    /// The index of `x`, or [`Error::NotInDomain`] when `x` is not
    /// enumerated.
    fn index_of(&self, x: &Self::Item) -> Result<Natural>;

    fn at_u64(&self, n: u64) -> Self::Item {
        self.at(&Natural::try_from(n).expect("indices are 1-based"))
    }

    /// The first `k` elements in index order.
    fn take(&self, k: u64) -> Vec<Self::Item> {
        (1..=k).map(|n| self.at_u64(n)).collect()
    }
}

impl<E: Enumeration + ?Sized> Enumeration for Arc<E> {
    type Item = E::Item;

    fn label(&self) -> String {
        (**self).label()
    }

    fn at(&self, n: &Natural) -> E::Item {
        (**self).at(n)
    }

    fn index_of(&self, x: &E::Item) -> Result<Natural> {
        (**self).index_of(x)
    }
}

/// Identity on `N`.
#[derive(Debug, Clone, Copy, Default)]
pub struct Naturals;

impl Enumeration for Naturals {
    type Item = Natural;

    fn label(&self) -> String {
        "n".into()
    }

    fn at(&self, n: &Natural) -> Natural {
        n.clone()
    }

    fn index_of(&self, x: &Natural) -> Result<Natural> {
        Ok(x.clone())
    }
}

pub fn naturals() -> Naturals {
    Naturals
}

type Forward<A, B> = Arc<dyn Fn(A) -> B + Send + Sync>;
type Backward<A, B> = Arc<dyn Fn(&B) -> Result<A> + Send + Sync>;
type Predicate<A> = Arc<dyn Fn(&A) -> bool + Send + Sync>;

/// Relabels the elements of an enumeration through a bijection given by a
/// forward map and its (partial) inverse.
pub struct Mapped<E: Enumeration, T> {
    label: String,
    inner: E,
    forward: Forward<E::Item, T>,
    backward: Backward<E::Item, T>,
}

impl<E: Enumeration + Clone, T> Clone for Mapped<E, T> {
    fn clone(&self) -> Self {
        Mapped {
            label: self.label.clone(),
            inner: self.inner.clone(),
            forward: Arc::clone(&self.forward),
            backward: Arc::clone(&self.backward),
        }
    }
}

impl<E, T> Enumeration for Mapped<E, T>
where
    E: Enumeration,
    T: Clone + PartialEq + fmt::Debug + Send + Sync,
{
    type Item = T;

    fn label(&self) -> String {
        self.label.clone()
    }

    fn at(&self, n: &Natural) -> T {
        (self.forward)(self.inner.at(n))
    }

    fn index_of(&self, x: &T) -> Result<Natural> {
        let pre = (self.backward)(x)?;
        self.inner.index_of(&pre)
    }
}

/// Transports `e` along `forward`; `backward` must invert it on the image
/// and reject everything else.
pub fn map<E, T, F, G>(label: impl Into<String>, e: E, forward: F, backward: G) -> Mapped<E, T>
where
    E: Enumeration,
    F: Fn(E::Item) -> T + Send + Sync + 'static,
    G: Fn(&T) -> Result<E::Item> + Send + Sync + 'static,
{
    Mapped {
        label: label.into(),
        inner: e,
        forward: Arc::new(forward),
        backward: Arc::new(backward),
    }
}

/// A finite list of elements placed in front of an enumeration.
#[derive(Clone)]
pub struct PrependFinite<E: Enumeration> {
    front: Arc<[E::Item]>,
    rest: E,
}

impl<E: Enumeration> Enumeration for PrependFinite<E> {
    type Item = E::Item;

    fn label(&self) -> String {
        self.rest.label()
    }

    fn at(&self, n: &Natural) -> E::Item {
        let len = BigUint::from(self.front.len());
        if n.value() <= &len {
            let i = n.to_usize().expect("bounded by the front length");
            self.front[i - 1].clone()
        } else {
            self.rest.at(&Natural::from_positive(n.value() - len))
        }
    }

    fn index_of(&self, x: &E::Item) -> Result<Natural> {
        if let Some(i) = self.front.iter().position(|f| f == x) {
            return Ok(Natural::from_positive(BigUint::from(i + 1)));
        }
        let k = self.rest.index_of(x)?;
        Ok(k.plus(&BigUint::from(self.front.len())))
    }
}

/// Shifts `e` back by `front.len()` positions and puts `front` first.
///
/// The front elements must be pairwise distinct and absent from `e`.
pub fn prepend_finite<E: Enumeration>(front: Vec<E::Item>, e: E) -> Result<PrependFinite<E>> {
    for (i, x) in front.iter().enumerate() {
        if front[..i].contains(x) {
            return Err(Error::InvalidArgument(format!(
                "duplicate front element {x:?}"
            )));
        }
        if let Ok(k) = e.index_of(x) {
            return Err(Error::InvalidArgument(format!(
                "front element {x:?} already occurs in {} at index {k}",
                e.label()
            )));
        }
    }
    Ok(PrependFinite {
        front: front.into(),
        rest: e,
    })
}

/// Alternates two enumerations with disjoint ranges: odd indices come from
/// the first, even indices from the second.
#[derive(Clone)]
pub struct Interleave<A, B> {
    first: A,
    second: B,
}

impl<A, B> Enumeration for Interleave<A, B>
where
    A: Enumeration,
    B: Enumeration<Item = A::Item>,
{
    type Item = A::Item;

    fn label(&self) -> String {
        format!(
            "interleave({}, {})",
            self.first.label(),
            self.second.label()
        )
    }

    fn at(&self, n: &Natural) -> A::Item {
        let v = n.value();
        let k = Natural::from_positive((v + 1u32) >> 1u32);
        if v.is_odd() {
            self.first.at(&k)
        } else {
            self.second.at(&k)
        }
    }

    fn index_of(&self, x: &A::Item) -> Result<Natural> {
        match self.first.index_of(x) {
            Ok(k) => Ok(bijections::to_odd(&k)),
            Err(Error::NotInDomain { .. }) => self
                .second
                .index_of(x)
                .map(|k| bijections::to_even(&k))
                .map_err(|e| match e {
                    Error::NotInDomain { value, .. } => Error::NotInDomain {
                        value,
                        expected: format!("in {}", self.label()),
                    },
                    other => other,
                }),
            Err(e) => Err(e),
        }
    }
}

pub fn interleave<A, B>(first: A, second: B) -> Interleave<A, B>
where
    A: Enumeration,
    B: Enumeration<Item = A::Item>,
{
    Interleave { first, second }
}

/// An ordered pair; renders as `(a,b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Pair<A, B>(pub A, pub B);

impl<A: fmt::Display, B: fmt::Display> fmt::Display for Pair<A, B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.0, self.1)
    }
}

impl<A, B> FromStr for Pair<A, B>
where
    A: FromStr<Err = Error>,
    B: FromStr<Err = Error>,
{
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::parse(s, "a pair (a,b)"))?;
        let mut depth = 0i32;
        let split = inner.char_indices().find(|&(_, c)| {
            match c {
                '(' => depth += 1,
                ')' => depth -= 1,
                ',' if depth == 0 => return true,
                _ => {}
            }
            false
        });
        let (i, _) = split.ok_or_else(|| Error::parse(s, "a pair (a,b)"))?;
        Ok(Pair(inner[..i].parse()?, inner[i + 1..].parse()?))
    }
}

/// The grid `A x B`, walked along the serpentine diagonals.
#[derive(Clone)]
pub struct Product<A, B> {
    rows: A,
    cols: B,
}

impl<A: Enumeration, B: Enumeration> Enumeration for Product<A, B> {
    type Item = Pair<A::Item, B::Item>;

    fn label(&self) -> String {
        format!("{} x {}", self.rows.label(), self.cols.label())
    }

    fn at(&self, n: &Natural) -> Self::Item {
        let GridPosition { row, col } = bijections::unpair(n);
        Pair(self.rows.at(&row), self.cols.at(&col))
    }

    fn index_of(&self, x: &Self::Item) -> Result<Natural> {
        let row = self.rows.index_of(&x.0)?;
        let col = self.cols.index_of(&x.1)?;
        Ok(bijections::pair_index(&GridPosition::new(row, col)))
    }
}

pub fn product<A: Enumeration, B: Enumeration>(rows: A, cols: B) -> Product<A, B> {
    Product { rows, cols }
}

/// Raw indices of `inner` examined so far and the ones that were kept.
#[derive(Debug, Default)]
struct Frontier {
    scanned: BigUint,
    kept: Vec<BigUint>,
}

/// The elements of an enumeration that satisfy a predicate, re-indexed
/// consecutively.
///
/// Both directions scan the inner enumeration forward from a shared,
/// memoized frontier. The predicate must accept infinitely many elements,
/// otherwise `at` past the last accepted element never returns.
pub struct FilterReindex<E: Enumeration> {
    label: String,
    inner: E,
    keep: Predicate<E::Item>,
    frontier: Arc<Mutex<Frontier>>,
}

impl<E: Enumeration + Clone> Clone for FilterReindex<E> {
    fn clone(&self) -> Self {
        FilterReindex {
            label: self.label.clone(),
            inner: self.inner.clone(),
            keep: Arc::clone(&self.keep),
            frontier: Arc::clone(&self.frontier),
        }
    }
}

impl<E: Enumeration> FilterReindex<E> {
    fn advance(&self, frontier: &mut Frontier) {
        frontier.scanned += 1u32;
        let raw = Natural::from_positive(frontier.scanned.clone());
        if (self.keep)(&self.inner.at(&raw)) {
            frontier.kept.push(frontier.scanned.clone());
        }
    }

    fn lock(&self) -> std::sync::MutexGuard<'_, Frontier> {
        // A panic inside `keep` leaves the frontier consistent (it only
        // advances after the predicate returns), so poisoning is ignored.
        self.frontier.lock().unwrap_or_else(|p| p.into_inner())
    }

    /// Raw index in the inner enumeration of the `n`-th kept element.
    pub fn raw_index(&self, n: &Natural) -> Natural {
        let n = n.to_usize().expect("index exceeds addressable memo");
        let mut frontier = self.lock();
        while frontier.kept.len() < n {
            self.advance(&mut frontier);
        }
        Natural::from_positive(frontier.kept[n - 1].clone())
    }
}

impl<E: Enumeration> Enumeration for FilterReindex<E> {
    type Item = E::Item;

    fn label(&self) -> String {
        self.label.clone()
    }

    fn at(&self, n: &Natural) -> E::Item {
        self.inner.at(&self.raw_index(n))
    }

    fn index_of(&self, x: &E::Item) -> Result<Natural> {
        if !(self.keep)(x) {
            return Err(Error::not_in_domain(
                format!("{x:?}"),
                format!("in {}", self.label),
            ));
        }
        let raw = self.inner.index_of(x)?.into_inner();
        let mut frontier = self.lock();
        while frontier.scanned < raw {
            self.advance(&mut frontier);
        }
        match frontier.kept.binary_search(&raw) {
            Ok(pos) => Ok(Natural::from_positive(BigUint::from(pos + 1))),
            Err(_) => Err(Error::not_in_domain(
                format!("{x:?}"),
                format!("in {}", self.label),
            )),
        }
    }
}

pub fn filter_reindex<E, P>(label: impl Into<String>, e: E, keep: P) -> FilterReindex<E>
where
    E: Enumeration,
    P: Fn(&E::Item) -> bool + Send + Sync + 'static,
{
    FilterReindex {
        label: label.into(),
        inner: e,
        keep: Arc::new(keep),
        frontier: Arc::default(),
    }
}

/// A grid fraction `numerator/denominator` as written in the grid, not
/// reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    pub numerator: Natural,
    pub denominator: Natural,
}

impl Fraction {
    pub fn is_reduced(&self) -> bool {
        self.numerator
            .value()
            .gcd(self.denominator.value())
            .is_one()
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from_parts(
            self.numerator.value().clone().into(),
            self.denominator.value().clone().into(),
        )
        .expect("grid denominators are positive")
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.numerator, self.denominator)
    }
}

impl FromStr for Fraction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (p, q) = s
            .trim()
            .split_once('/')
            .ok_or_else(|| Error::parse(s, "a fraction p/q"))?;
        Ok(Fraction {
            numerator: p.parse()?,
            denominator: q.parse()?,
        })
    }
}

pub type Evens = Mapped<Naturals, Natural>;
pub type Odds = Mapped<Naturals, Natural>;
pub type Wholes = PrependFinite<Mapped<Naturals, Whole>>;
pub type Integers = PrependFinite<Interleave<Mapped<Naturals, Integer>, Mapped<Naturals, Integer>>>;
pub type GridFractions = Mapped<Product<Naturals, Naturals>, Fraction>;
pub type ReducedFractions = FilterReindex<GridFractions>;
pub type RationalsPositive = Mapped<ReducedFractions, Rational>;
pub type RationalsAll =
    PrependFinite<Interleave<RationalsPositive, Mapped<RationalsPositive, Rational>>>;

pub fn evens() -> Evens {
    map(
        "evens",
        naturals(),
        |n| bijections::to_even(&n),
        bijections::from_even,
    )
}

pub fn odds() -> Odds {
    map(
        "odds",
        naturals(),
        |n| bijections::to_odd(&n),
        bijections::from_odd,
    )
}

/// `1, 2, 3, ...` as integers.
pub fn positive_integers() -> Mapped<Naturals, Integer> {
    map(
        "positive integers",
        naturals(),
        Integer::from,
        |z: &Integer| {
            Natural::try_from(z.clone()).map_err(|_| Error::not_in_domain(z, "a positive integer"))
        },
    )
}

/// `-1, -2, -3, ...`
pub fn negative_integers() -> Mapped<Naturals, Integer> {
    map(
        "negative integers",
        naturals(),
        |n| -Integer::from(n),
        |z: &Integer| {
            Natural::try_from(-z.clone()).map_err(|_| Error::not_in_domain(z, "a negative integer"))
        },
    )
}

/// `N0` in the order `0, 1, 2, ...`.
pub fn wholes() -> Wholes {
    let shifted = map("n0", naturals(), Whole::from, |w: &Whole| {
        Natural::try_from(w.clone()).map_err(|_| Error::not_in_domain(w, "in n0"))
    });
    prepend_finite(vec![Whole::zero()], shifted).expect("0 is not a positive natural")
}

/// `Z` in the order `0, 1, -1, 2, -2, ...`; agrees with
/// [`bijections::to_integer`].
pub fn integers() -> Integers {
    prepend_finite(
        vec![Integer::zero()],
        interleave(positive_integers(), negative_integers()),
    )
    .expect("0 is neither positive nor negative")
}

/// Every cell of the grid as the fraction `row/col`, reduced or not.
pub fn grid_fractions() -> GridFractions {
    map(
        "grid fractions",
        product(naturals(), naturals()),
        |Pair(numerator, denominator)| Fraction {
            numerator,
            denominator,
        },
        |f: &Fraction| Ok(Pair(f.numerator.clone(), f.denominator.clone())),
    )
}

/// The grid with non-reduced cells such as `2/2` skipped.
pub fn reduced_fractions() -> ReducedFractions {
    filter_reindex("reduced fractions", grid_fractions(), Fraction::is_reduced)
}

/// Every positive rational exactly once, in serpentine grid order with
/// non-reduced cells skipped: `1/1, 1/2, 2/1, 3/1, 1/3, 1/4, ...`.
pub fn rationals_positive() -> RationalsPositive {
    map(
        "q+",
        reduced_fractions(),
        |f: Fraction| f.to_rational(),
        |q: &Rational| {
            if !q.is_positive() {
                return Err(Error::not_in_domain(q, "a positive rational"));
            }
            Ok(Fraction {
                numerator: Natural::try_from(Integer::new(q.numerator().clone()))?,
                denominator: Natural::new(q.denominator().clone())?,
            })
        },
    )
}

/// Every rational exactly once: `0`, then positives and their negatives
/// alternating, `0, 1, -1, 1/2, -1/2, 2, -2, ...`.
pub fn rationals_all() -> RationalsAll {
    let positive = rationals_positive();
    let negative = map(
        "q-",
        positive.clone(),
        |q: Rational| -q,
        |q: &Rational| {
            if !q.is_negative() {
                return Err(Error::not_in_domain(q, "a negative rational"));
            }
            Ok(-q.clone())
        },
    );
    prepend_finite(vec![Rational::zero()], interleave(positive, negative))
        .expect("0 is not in q+ or q-")
}

/// An enumeration driven through text: indices in, rendered values out, and
/// parsed values back to indices.
pub trait TextEnumeration: Send + Sync {
    fn name(&self) -> &str;
    fn render_at(&self, n: &Natural) -> String;
    fn index_of_text(&self, value: &str) -> Result<Natural>;
}

struct Textual<E: Enumeration> {
    name: &'static str,
    inner: E,
    parse: fn(&str) -> Result<E::Item>,
}

impl<E> TextEnumeration for Textual<E>
where
    E: Enumeration,
    E::Item: fmt::Display,
{
    fn name(&self) -> &str {
        self.name
    }

    fn render_at(&self, n: &Natural) -> String {
        self.inner.at(n).to_string()
    }

    fn index_of_text(&self, value: &str) -> Result<Natural> {
        let x = (self.parse)(value)?;
        self.inner.index_of(&x).map_err(|e| match e {
            Error::NotInDomain { .. } => {
                Error::not_in_domain(value.trim(), format!("in {}", self.name))
            }
            other => other,
        })
    }
}

fn parse_with<T: FromStr<Err = Error>>(s: &str) -> Result<T> {
    s.parse()
}

/// Rationals typed as text must be in reduced form with a positive
/// denominator: `2/4` names a skipped grid cell, not a second copy of `1/2`.
fn parse_reduced_rational(s: &str) -> Result<Rational> {
    let q: Rational = s.parse()?;
    let t = s.trim();
    let canonical = q.to_string();
    if t == canonical
        || (q.denominator().is_one()
            && t.strip_prefix('+').unwrap_or(t) == q.numerator().to_string())
    {
        Ok(q)
    } else {
        Err(Error::not_in_domain(
            t,
            format!("a reduced fraction (did you mean {canonical}?)"),
        ))
    }
}

/// Names accepted by [`by_name`].
pub const NAMES: &[&str] = &["n", "evens", "odds", "n0", "z", "grid", "q+", "q"];

/// The canonical enumerations by name.
pub fn by_name(name: &str) -> Option<Box<dyn TextEnumeration>> {
    Some(match name {
        "n" => Box::new(Textual {
            name: "n",
            inner: naturals(),
            parse: parse_with::<Natural>,
        }),
        "evens" | "e" => Box::new(Textual {
            name: "evens",
            inner: evens(),
            parse: parse_with::<Natural>,
        }),
        "odds" => Box::new(Textual {
            name: "odds",
            inner: odds(),
            parse: parse_with::<Natural>,
        }),
        "n0" => Box::new(Textual {
            name: "n0",
            inner: wholes(),
            parse: parse_with::<Whole>,
        }),
        "z" => Box::new(Textual {
            name: "z",
            inner: integers(),
            parse: parse_with::<Integer>,
        }),
        "grid" => Box::new(Textual {
            name: "grid",
            inner: grid_fractions(),
            parse: parse_with::<Fraction>,
        }),
        "q+" => Box::new(Textual {
            name: "q+",
            inner: rationals_positive(),
            parse: parse_reduced_rational,
        }),
        "q" => Box::new(Textual {
            name: "q",
            inner: rationals_all(),
            parse: parse_reduced_rational,
        }),
        _ => return None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Natural {
        Natural::try_from(n).unwrap()
    }

    fn q(p: i64, d: i64) -> Rational {
        Rational::from_i64(p, d).unwrap()
    }

    fn frac(p: u64, d: u64) -> Fraction {
        Fraction {
            numerator: nat(p),
            denominator: nat(d),
        }
    }

    #[test]
    fn evens_examples() {
        let e = evens();
        assert_eq!(e.at_u64(3), nat(6));
        assert_eq!(e.index_of(&nat(18)).unwrap(), nat(9));
        assert!(matches!(
            e.index_of(&nat(7)),
            Err(Error::NotInDomain { .. })
        ));
    }

    #[test]
    fn prepend_examples() {
        let n0 = prepend_finite(
            vec![Whole::zero()],
            map("n", naturals(), Whole::from, |w: &Whole| {
                Natural::try_from(w.clone())
            }),
        )
        .unwrap();
        assert_eq!(n0.at_u64(1), Whole::from(0));
        assert_eq!(n0.at_u64(9), Whole::from(8));
        assert_eq!(n0.index_of(&Whole::from(0)).unwrap(), nat(1));
        assert_eq!(n0.index_of(&Whole::from(8)).unwrap(), nat(9));

        let same = prepend_finite(Vec::new(), evens()).unwrap();
        for n in 1..50 {
            assert_eq!(same.at_u64(n), evens().at_u64(n));
        }
    }

    #[test]
    fn prepend_rejects_duplicates_and_overlap() {
        assert!(prepend_finite(vec![nat(1), nat(1)], odds()).is_err());
        // 4 is already even
        assert!(prepend_finite(vec![nat(4)], evens()).is_err());
        assert!(prepend_finite(vec![nat(3)], evens()).is_ok());
    }

    #[test]
    fn interleave_examples() {
        let non_positives = prepend_finite(vec![Integer::zero()], negative_integers()).unwrap();
        let z = interleave(non_positives, positive_integers());
        assert_eq!(z.at_u64(5), Integer::from(-2));
        assert_eq!(z.at_u64(4), Integer::from(2));
        for n in 1..200 {
            assert_eq!(z.at_u64(n), integers().at_u64(n));
        }

        let split = interleave(odds(), evens());
        for n in 1..=1000 {
            assert_eq!(split.at_u64(n), nat(n));
            assert_eq!(split.index_of(&nat(n)).unwrap(), nat(n));
        }
    }

    #[test]
    fn integers_follow_to_integer() {
        let z = integers();
        for n in 1..2000 {
            assert_eq!(z.at_u64(n), bijections::to_integer(&nat(n)));
        }
    }

    #[test]
    fn product_examples() {
        let grid = product(evens(), odds());
        assert_eq!(grid.at_u64(1), Pair(evens().at_u64(1), odds().at_u64(1)));
        let nn = product(naturals(), naturals());
        assert_eq!(nn.at_u64(5), Pair(nat(2), nat(2)));
        assert_eq!(nn.at_u64(10), Pair(nat(4), nat(1)));
        assert_eq!(nn.index_of(&Pair(nat(4), nat(1))).unwrap(), nat(10));
    }

    #[test]
    fn filter_examples() {
        let rf = reduced_fractions();
        assert_eq!(rf.at_u64(5), frac(1, 3));
        assert_eq!(rf.at_u64(9), frac(4, 1));
        assert!(matches!(
            rf.index_of(&frac(2, 4)),
            Err(Error::NotInDomain { .. })
        ));
        assert!(matches!(
            rf.index_of(&frac(2, 2)),
            Err(Error::NotInDomain { .. })
        ));

        let all = filter_reindex("all", grid_fractions(), |_| true);
        for n in 1..100 {
            assert_eq!(all.at_u64(n), grid_fractions().at_u64(n));
        }
    }

    #[test]
    fn rationals_positive_prefix() {
        let expected = [
            (1, 1),
            (1, 2),
            (2, 1),
            (3, 1),
            (1, 3),
            (1, 4),
            (2, 3),
            (3, 2),
            (4, 1),
        ];
        let got = rationals_positive().take(9);
        let want: Vec<Rational> = expected.iter().map(|&(p, d)| q(p, d)).collect();
        assert_eq!(got, want);
        assert_eq!(rationals_positive().index_of(&q(2, 3)).unwrap(), nat(7));
        assert!(rationals_positive().index_of(&q(-2, 3)).is_err());
        assert!(rationals_positive().index_of(&Rational::zero()).is_err());
    }

    #[test]
    fn rationals_all_examples() {
        let all = rationals_all();
        assert_eq!(all.at_u64(1), Rational::zero());
        assert_eq!(all.at_u64(2), q(1, 1));
        assert_eq!(all.at_u64(3), q(-1, 1));
        let pos = rationals_positive().index_of(&q(1, 2)).unwrap();
        let expected = bijections::to_even(&pos).plus(&BigUint::one());
        assert_eq!(all.index_of(&q(-1, 2)).unwrap(), expected);
        assert_eq!(expected, nat(5));
    }

    #[test]
    fn memo_is_transparent() {
        let warm = rationals_positive();
        let _ = warm.at_u64(3000);
        for n in (1..3000).rev().step_by(37) {
            assert_eq!(warm.at_u64(n), rationals_positive().at_u64(n));
        }
        let x = q(17, 19);
        assert_eq!(
            warm.index_of(&x).unwrap(),
            rationals_positive().index_of(&x).unwrap()
        );
    }

    #[test]
    fn concurrent_queries_match_sequential() {
        let shared = rationals_positive();
        let sequential: Vec<Rational> = rationals_positive().take(2000);
        std::thread::scope(|s| {
            for t in 0..4u64 {
                let e = shared.clone();
                let want = &sequential;
                s.spawn(move || {
                    for n in (1 + t..=2000).step_by(3) {
                        let v = e.at_u64(n);
                        assert_eq!(v, want[(n - 1) as usize]);
                        assert_eq!(e.index_of(&v).unwrap(), nat(n));
                    }
                });
            }
        });
    }

    #[test]
    fn pair_text() {
        let p: Pair<Natural, Pair<Natural, Natural>> = "(1,(2,3))".parse().unwrap();
        assert_eq!(p.to_string(), "(1,(2,3))");
        assert!("(1 2)".parse::<Pair<Natural, Natural>>().is_err());
    }

    #[test]
    fn text_catalog() {
        let qp = by_name("q+").unwrap();
        assert_eq!(qp.render_at(&nat(9)), "4/1");
        assert_eq!(qp.index_of_text("2/3").unwrap(), nat(7));
        assert_eq!(qp.index_of_text("4").unwrap(), nat(9));
        let err = qp.index_of_text("2/4").unwrap_err();
        assert!(matches!(err, Error::NotInDomain { .. }), "{err}");
        assert!(matches!(
            qp.index_of_text("-1/2").unwrap_err(),
            Error::NotInDomain { .. }
        ));
        assert!(matches!(
            qp.index_of_text("1/0").unwrap_err(),
            Error::InvalidRational { .. }
        ));
        assert!(matches!(
            qp.index_of_text("x").unwrap_err(),
            Error::Parse { .. }
        ));
        let z = by_name("z").unwrap();
        assert_eq!(z.render_at(&nat(9)), "-4");
        assert_eq!(z.index_of_text("-4").unwrap(), nat(9));
        assert!(by_name("reals").is_none());
        for name in NAMES {
            let e = by_name(name).unwrap();
            for n in 1..60 {
                let v = e.render_at(&nat(n));
                assert_eq!(e.index_of_text(&v).unwrap(), nat(n), "{name} {v}");
            }
        }
    }
}
