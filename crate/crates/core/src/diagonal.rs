//! The diagonal construction on decimal digit streams.
//!
//! A [`DigitStream`] stands for a real in `[0, 1)` through the digits after
//! the decimal point, at 1-based positions. Given a [`RealList`], the
//! anti-diagonal changes the `n`-th digit of the `n`-th stream, so it differs
//! from every listed stream somewhere.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::numbers::Digit;

/// Digits of a real in `[0, 1)`, position 1 being the first decimal place.
pub trait DigitStream: Send + Sync {
    fn digit_at(&self, position: usize) -> Result<Digit>;

    /// Where the stream came from, for diagnostics.
    fn source(&self) -> String;

    /// Digits at positions `1..=len`.
    fn prefix(&self, len: usize) -> Result<Vec<Digit>> {
        (1..=len).map(|n| self.digit_at(n)).collect()
    }
}

impl<S: DigitStream + ?Sized> DigitStream for Arc<S> {
    fn digit_at(&self, position: usize) -> Result<Digit> {
        (**self).digit_at(position)
    }

    fn source(&self) -> String {
        (**self).source()
    }
}

impl<S: DigitStream + ?Sized> DigitStream for &S {
    fn digit_at(&self, position: usize) -> Result<Digit> {
        (**self).digit_at(position)
    }

    fn source(&self) -> String {
        (**self).source()
    }
}

fn check_position(position: usize) -> Result<()> {
    if position == 0 {
        return Err(Error::InvalidArgument("digit positions start at 1".into()));
    }
    Ok(())
}

/// A stream known only up to a finite prefix. Asking past the prefix is an
/// [`Error::OutOfPrefix`], never an invented digit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixStream {
    source: String,
    digits: Vec<Digit>,
}

impl PrefixStream {
    pub fn new(source: impl Into<String>, digits: Vec<Digit>) -> Self {
        PrefixStream {
            source: source.into(),
            digits,
        }
    }

    /// Parses the fractional digits of one line, tolerating a leading `0.`
    /// and trailing `...`.
    pub fn parse(source: impl Into<String>, line: &str) -> Result<Self> {
        let t = line.trim();
        let t = t.strip_prefix("0.").unwrap_or(t);
        let t = t.trim_end_matches('.');
        if t.is_empty() {
            return Err(Error::parse(line, "a digit string"));
        }
        let digits = t
            .chars()
            .map(Digit::from_char)
            .collect::<Result<Vec<_>>>()
            .map_err(|_| Error::parse(line, "a digit string"))?;
        Ok(PrefixStream::new(source, digits))
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }
}

impl DigitStream for PrefixStream {
    fn digit_at(&self, position: usize) -> Result<Digit> {
        check_position(position)?;
        self.digits
            .get(position - 1)
            .copied()
            .ok_or_else(|| Error::OutOfPrefix {
                stream: self.source.clone(),
                position,
                available: self.digits.len(),
            })
    }

    fn source(&self) -> String {
        self.source.clone()
    }
}

/// A stream given by a digit rule.
#[derive(Clone)]
pub struct FnStream {
    source: String,
    rule: Arc<dyn Fn(usize) -> Digit + Send + Sync>,
}

impl FnStream {
    pub fn new(
        source: impl Into<String>,
        rule: impl Fn(usize) -> Digit + Send + Sync + 'static,
    ) -> Self {
        FnStream {
            source: source.into(),
            rule: Arc::new(rule),
        }
    }

    /// A prefix followed by a repeating block, e.g. `0.12(3)`.
    pub fn eventually_periodic(
        source: impl Into<String>,
        head: Vec<Digit>,
        period: Vec<Digit>,
    ) -> Self {
        assert!(!period.is_empty(), "period must be non-empty");
        FnStream::new(source, move |n| {
            let i = n - 1;
            if i < head.len() {
                head[i]
            } else {
                period[(i - head.len()) % period.len()]
            }
        })
    }

    pub fn constant(d: Digit) -> Self {
        FnStream::new(format!("0.({d})"), move |_| d)
    }
}

impl fmt::Debug for FnStream {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FnStream")
            .field("source", &self.source)
            .finish()
    }
}

impl DigitStream for FnStream {
    fn digit_at(&self, position: usize) -> Result<Digit> {
        check_position(position)?;
        Ok((self.rule)(position))
    }

    fn source(&self) -> String {
        self.source.clone()
    }
}

pub type SharedStream = Arc<dyn DigitStream>;

/// A listing of digit streams by 1-based index.
pub trait RealList: Send + Sync {
    fn stream_at(&self, index: usize) -> Result<SharedStream>;
}

impl<L: RealList + ?Sized> RealList for &L {
    fn stream_at(&self, index: usize) -> Result<SharedStream> {
        (**self).stream_at(index)
    }
}

impl<L: RealList + ?Sized> RealList for Arc<L> {
    fn stream_at(&self, index: usize) -> Result<SharedStream> {
        (**self).stream_at(index)
    }
}

/// A finite list, such as one read from a file.
#[derive(Clone, Default)]
pub struct StreamList {
    streams: Vec<SharedStream>,
}

impl StreamList {
    pub fn new(streams: Vec<SharedStream>) -> Self {
        StreamList { streams }
    }

    /// One stream per non-blank line; `#` lines are comments.
    pub fn parse(text: &str) -> Result<Self> {
        let mut streams: Vec<SharedStream> = Vec::new();
        for (i, line) in text.lines().enumerate() {
            let t = line.trim();
            if t.is_empty() || t.starts_with('#') {
                continue;
            }
            let s = PrefixStream::parse(format!("line {}", i + 1), t).map_err(|e| match e {
                Error::Parse { input, what } => Error::Parse {
                    input: format!("line {}: {input}", i + 1),
                    what,
                },
                other => other,
            })?;
            streams.push(Arc::new(s));
        }
        Ok(StreamList { streams })
    }

    pub fn len(&self) -> usize {
        self.streams.len()
    }

    pub fn is_empty(&self) -> bool {
        self.streams.is_empty()
    }
}

impl fmt::Debug for StreamList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.streams.iter().map(|s| s.source()))
            .finish()
    }
}

impl RealList for StreamList {
    fn stream_at(&self, index: usize) -> Result<SharedStream> {
        if index == 0 {
            return Err(Error::InvalidArgument("list indices start at 1".into()));
        }
        self.streams.get(index - 1).cloned().ok_or_else(|| {
            Error::not_in_domain(
                format!("index {index}"),
                format!("listed (the list has {} streams)", self.streams.len()),
            )
        })
    }
}

/// An infinite list given by a rule.
pub struct FnList<F>(pub F);

impl<F> RealList for FnList<F>
where
    F: Fn(usize) -> SharedStream + Send + Sync,
{
    fn stream_at(&self, index: usize) -> Result<SharedStream> {
        if index == 0 {
            return Err(Error::InvalidArgument("list indices start at 1".into()));
        }
        Ok((self.0)(index))
    }
}

/// The digit of the `n`-th stream at the `n`-th place.
fn diagonal_digit<L: RealList>(list: &L, n: usize) -> Result<Digit> {
    check_position(n)?;
    list.stream_at(n)?.digit_at(n)
}

/// Digit `n` is the `n`-th digit of stream `n` plus one, with 9 becoming 0.
pub struct AntiDiagonal<L> {
    list: L,
}

impl<L: RealList> DigitStream for AntiDiagonal<L> {
    fn digit_at(&self, position: usize) -> Result<Digit> {
        diagonal_digit(&self.list, position).map(Digit::wrapping_succ)
    }

    fn source(&self) -> String {
        "anti-diagonal".into()
    }
}

pub fn anti_diagonal<L: RealList>(list: L) -> AntiDiagonal<L> {
    AntiDiagonal { list }
}

/// Digit `n` is 5, or 4 when the diagonal digit is itself 5.
///
/// The output never contains 0 or 9, so it has a single decimal expansion and
/// a digit difference is also a difference in value.
pub struct SafeAntiDiagonal<L> {
    list: L,
}

impl<L: RealList> DigitStream for SafeAntiDiagonal<L> {
    fn digit_at(&self, position: usize) -> Result<Digit> {
        let d = diagonal_digit(&self.list, position)?;
        Digit::new(if d.value() == 5 { 4 } else { 5 })
    }

    fn source(&self) -> String {
        "safe anti-diagonal".into()
    }
}

pub fn safe_anti_diagonal<L: RealList>(list: L) -> SafeAntiDiagonal<L> {
    SafeAntiDiagonal { list }
}

/// True iff `candidate` differs from stream `n` at place `n` for every
/// `n <= depth`.
pub fn verify_escape<L: RealList, S: DigitStream + ?Sized>(
    list: &L,
    candidate: &S,
    depth: usize,
) -> Result<bool> {
    if depth == 0 {
        return Err(Error::InvalidArgument(
            "escape depth must be at least 1".into(),
        ));
    }
    for n in 1..=depth {
        if candidate.digit_at(n)? == diagonal_digit(list, n)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Renders digits as `0.d1d2d3...`.
pub fn render_prefix(digits: &[Digit]) -> String {
    let mut s = String::with_capacity(digits.len() + 2);
    s.push_str("0.");
    s.extend(digits.iter().map(|d| d.to_char()));
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::sync::atomic::{AtomicUsize, Ordering};

    fn digits(s: &str) -> Vec<Digit> {
        s.chars().map(|c| Digit::from_char(c).unwrap()).collect()
    }

    fn listed_reals() -> StreamList {
        StreamList::parse("0.3333\n0.5432\n0.6775\n0.1010\n").unwrap()
    }

    #[test]
    fn worked_list() {
        let list = listed_reals();
        let ad = anti_diagonal(&list);
        assert_eq!(ad.prefix(4).unwrap(), digits("4581"));
        assert_eq!(render_prefix(&ad.prefix(4).unwrap()), "0.4581");
        assert!(verify_escape(&list, &ad, 4).unwrap());
        let safe = safe_anti_diagonal(&list);
        assert_eq!(safe.prefix(4).unwrap(), digits("5555"));
        assert!(verify_escape(&list, &safe, 4).unwrap());
    }

    #[test]
    fn nines_wrap_to_zero() {
        let nines =
            FnList(|_| Arc::new(FnStream::constant(Digit::new(9).unwrap())) as SharedStream);
        assert_eq!(
            anti_diagonal(&nines).prefix(50).unwrap(),
            vec![Digit::ZERO; 50]
        );
        let zeros = FnList(|_| Arc::new(FnStream::constant(Digit::ZERO)) as SharedStream);
        assert_eq!(
            anti_diagonal(&zeros).prefix(50).unwrap(),
            vec![Digit::new(1).unwrap(); 50]
        );
        let fives =
            FnList(|_| Arc::new(FnStream::constant(Digit::new(5).unwrap())) as SharedStream);
        assert_eq!(
            safe_anti_diagonal(&fives).prefix(50).unwrap(),
            vec![Digit::new(4).unwrap(); 50]
        );
    }

    #[test]
    fn copy_of_first_stream_does_not_escape() {
        let list = listed_reals();
        let first = list.stream_at(1).unwrap();
        assert!(!verify_escape(&list, &first, 1).unwrap());
    }

    #[test]
    fn depth_zero_rejected() {
        let list = listed_reals();
        assert!(verify_escape(&list, &anti_diagonal(&list), 0).is_err());
    }

    #[test]
    fn beyond_prefix_is_reported() {
        let list = StreamList::parse("12\n34\n56\n").unwrap();
        let ad = anti_diagonal(&list);
        assert_eq!(ad.prefix(2).unwrap(), digits("25"));
        assert!(matches!(
            ad.digit_at(3),
            Err(Error::OutOfPrefix { position: 3, .. })
        ));
        let short = StreamList::parse("1234\n").unwrap();
        assert!(matches!(
            anti_diagonal(&short).digit_at(2),
            Err(Error::NotInDomain { .. })
        ));
    }

    struct Counting<L> {
        inner: L,
        queries: Arc<AtomicUsize>,
    }

    struct CountingStream {
        inner: SharedStream,
        queries: Arc<AtomicUsize>,
    }

    impl DigitStream for CountingStream {
        fn digit_at(&self, position: usize) -> Result<Digit> {
            self.queries.fetch_add(1, Ordering::SeqCst);
            self.inner.digit_at(position)
        }

        fn source(&self) -> String {
            self.inner.source()
        }
    }

    impl<L: RealList> RealList for Counting<L> {
        fn stream_at(&self, index: usize) -> Result<SharedStream> {
            Ok(Arc::new(CountingStream {
                inner: self.inner.stream_at(index)?,
                queries: Arc::clone(&self.queries),
            }))
        }
    }

    #[test]
    fn one_query_per_digit() {
        let queries = Arc::new(AtomicUsize::new(0));
        let list = Counting {
            inner: FnList(|i| {
                Arc::new(FnStream::new(format!("s{i}"), move |n| {
                    Digit::new(((i * 7 + n * 3) % 10) as u8).unwrap()
                })) as SharedStream
            }),
            queries: Arc::clone(&queries),
        };
        let ad = anti_diagonal(&list);
        for n in [1usize, 17, 500, 3] {
            let before = queries.load(Ordering::SeqCst);
            ad.digit_at(n).unwrap();
            assert_eq!(queries.load(Ordering::SeqCst) - before, 1);
        }
    }

    #[test]
    fn stream_parsing() {
        assert_eq!(PrefixStream::parse("s", "0.4581...").unwrap().len(), 4);
        assert_eq!(PrefixStream::parse("s", "4581").unwrap().len(), 4);
        assert!(PrefixStream::parse("s", "0,4581").is_err());
        assert!(PrefixStream::parse("s", "0.").is_err());
        assert!(StreamList::parse("123\nabc\n")
            .unwrap_err()
            .to_string()
            .contains("line 2"));
        let periodic = FnStream::eventually_periodic("x", digits("12"), digits("3"));
        assert_eq!(periodic.prefix(5).unwrap(), digits("12333"));
    }
}
