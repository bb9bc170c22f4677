//! An always-full hotel with rooms `1, 2, 3, ...`, kept as a log of arrival
//! events. Each event is a closed-form relocation of the current guests, so
//! both `room_of` and `occupant_of` cost one arithmetic step per event.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer as _;
use num_traits::One;

use crate::error::{Error, Result};
use crate::numbers::Natural;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GuestId {
    /// The guest who started in this room.
    Original(Natural),
    /// Seat `seat` of the `batch`-th event in the log (both 1-based).
    Arrival { batch: Natural, seat: Natural },
}

impl GuestId {
    pub fn original(room: u64) -> Result<Self> {
        Ok(GuestId::Original(Natural::try_from(room)?))
    }

    pub fn arrival(batch: u64, seat: u64) -> Result<Self> {
        Ok(GuestId::Arrival {
            batch: Natural::try_from(batch)?,
            seat: Natural::try_from(seat)?,
        })
    }
}

impl fmt::Display for GuestId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GuestId::Original(n) => write!(f, "original {n}"),
            GuestId::Arrival { batch, seat } => write!(f, "arrival {batch} {seat}"),
        }
    }
}

/// Accepts the `Display` form: `original <room>` or `arrival <batch> <seat>`.
impl FromStr for GuestId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let words: Vec<&str> = s.split_whitespace().collect();
        let bad = || Error::parse(s, "a guest (original N | arrival BATCH SEAT)");
        let nat = |w: &str| w.parse::<Natural>().map_err(|_| bad());
        match words.as_slice() {
            ["original", n] => Ok(GuestId::Original(nat(n)?)),
            ["arrival", b, seat] => Ok(GuestId::Arrival {
                batch: nat(b)?,
                seat: nat(seat)?,
            }),
            _ => Err(bad()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HotelEvent {
    /// Everyone moves up one room; the newcomer takes room 1.
    ArriveOne,
    /// Everyone moves up `k` rooms; seat `j` takes room `j`.
    ArriveFinite(Natural),
    /// Everyone moves to the doubled room; seat `k` takes odd room `2k - 1`.
    ArriveBus,
}

impl HotelEvent {
    /// Where the guest now in `room` goes.
    fn relocate(&self, room: &BigUint) -> BigUint {
        match self {
            HotelEvent::ArriveOne => room + 1u32,
            HotelEvent::ArriveFinite(k) => room + k.value(),
            HotelEvent::ArriveBus => room << 1u32,
        }
    }

    /// Room given to the newcomer in `seat`, if the event has such a seat.
    fn seat_room(&self, seat: &BigUint) -> Option<BigUint> {
        match self {
            HotelEvent::ArriveOne => seat.is_one().then(|| seat.clone()),
            HotelEvent::ArriveFinite(k) => (seat <= k.value()).then(|| seat.clone()),
            HotelEvent::ArriveBus => Some((seat << 1u32) - 1u32),
        }
    }

    /// Undoes the event for one room: either the newcomer's seat, or the
    /// room its occupant held before.
    fn unwind(&self, room: &BigUint) -> std::result::Result<BigUint, BigUint> {
        match self {
            HotelEvent::ArriveOne if room.is_one() => Ok(room.clone()),
            HotelEvent::ArriveOne => Err(room - 1u32),
            HotelEvent::ArriveFinite(k) if room <= k.value() => Ok(room.clone()),
            HotelEvent::ArriveFinite(k) => Err(room - k.value()),
            HotelEvent::ArriveBus if room.is_odd() => Ok((room + 1u32) >> 1u32),
            HotelEvent::ArriveBus => Err(room >> 1u32),
        }
    }
}

impl fmt::Display for HotelEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            HotelEvent::ArriveOne => f.write_str("one"),
            HotelEvent::ArriveFinite(k) => write!(f, "finite {k}"),
            HotelEvent::ArriveBus => f.write_str("bus"),
        }
    }
}

/// The hotel after a sequence of arrivals. Operations return a new state.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct HotelState {
    log: Vec<HotelEvent>,
}

impl HotelState {
    /// A full hotel where every room holds its original guest.
    pub fn new() -> Self {
        HotelState::default()
    }

    pub fn from_events(events: impl IntoIterator<Item = HotelEvent>) -> Self {
        HotelState {
            log: events.into_iter().collect(),
        }
    }

    pub fn log(&self) -> &[HotelEvent] {
        &self.log
    }

    fn with(&self, event: HotelEvent) -> Self {
        let mut log = self.log.clone();
        log.push(event);
        HotelState { log }
    }

    pub fn arrive_one(&self) -> Self {
        self.with(HotelEvent::ArriveOne)
    }

    pub fn arrive_finite(&self, k: &Natural) -> Self {
        self.with(HotelEvent::ArriveFinite(k.clone()))
    }

    /// Like [`HotelState::arrive_finite`] for a plain count; `k = 0` is
    /// rejected.
    pub fn arrive_finite_u64(&self, k: u64) -> Result<Self> {
        let k = Natural::try_from(k)
            .map_err(|_| Error::InvalidArgument("a group of arrivals needs k >= 1".into()))?;
        Ok(self.arrive_finite(&k))
    }

    pub fn arrive_bus(&self) -> Self {
        self.with(HotelEvent::ArriveBus)
    }

    pub fn apply(&self, event: HotelEvent) -> Self {
        self.with(event)
    }

    /// Current room of `guest`.
    pub fn room_of(&self, guest: &GuestId) -> Result<Natural> {
        let (mut room, later) = match guest {
            GuestId::Original(n) => (n.value().clone(), &self.log[..]),
            GuestId::Arrival { batch, seat } => {
                let no_such = || Error::NoSuchGuest(guest.to_string());
                let b = batch
                    .to_usize()
                    .filter(|&b| b <= self.log.len())
                    .ok_or_else(no_such)?;
                let room = self.log[b - 1]
                    .seat_room(seat.value())
                    .ok_or_else(no_such)?;
                (room, &self.log[b..])
            }
        };
        for event in later {
            room = event.relocate(&room);
        }
        Ok(Natural::from_positive(room))
    }

    /// The guest currently in `room`; every room is occupied.
    pub fn occupant_of(&self, room: &Natural) -> GuestId {
        let mut room = room.value().clone();
        for (i, event) in self.log.iter().enumerate().rev() {
            match event.unwind(&room) {
                Ok(seat) => {
                    return GuestId::Arrival {
                        batch: Natural::from_positive(BigUint::from(i + 1)),
                        seat: Natural::from_positive(seat),
                    }
                }
                Err(earlier) => room = earlier,
            }
        }
        GuestId::Original(Natural::from_positive(room))
    }
}

/// One line of a hotel script.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScriptCommand {
    Event(HotelEvent),
    RoomOf(GuestId),
    Occupant(Natural),
}

impl fmt::Display for ScriptCommand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ScriptCommand::Event(e) => e.fmt(f),
            ScriptCommand::RoomOf(g) => write!(f, "room-of {g}"),
            ScriptCommand::Occupant(r) => write!(f, "occupant {r}"),
        }
    }
}

impl FromStr for ScriptCommand {
    type Err = Error;

    fn from_str(line: &str) -> Result<Self> {
        let words: Vec<&str> = line.split_whitespace().collect();
        let bad = || Error::parse(line, "a hotel command");
        let nat = |s: &str| s.parse::<Natural>().map_err(|_| bad());
        Ok(match words.as_slice() {
            ["one"] => ScriptCommand::Event(HotelEvent::ArriveOne),
            ["finite", k] => ScriptCommand::Event(HotelEvent::ArriveFinite(nat(k)?)),
            ["bus"] => ScriptCommand::Event(HotelEvent::ArriveBus),
            ["room-of", guest @ ..] if !guest.is_empty() => {
                ScriptCommand::RoomOf(guest.join(" ").parse().map_err(|_| bad())?)
            }
            ["occupant", r] => ScriptCommand::Occupant(nat(r)?),
            _ => return Err(bad()),
        })
    }
}

/// Parses a script: one command per line, `#` starts a comment, blank lines
/// are skipped. Errors carry the 1-based line number.
pub fn parse_script(text: &str) -> Result<Vec<(usize, ScriptCommand)>> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let cmd = line.parse().map_err(|e| match e {
            Error::Parse { input, what } => Error::Parse {
                input: format!("line {}: {input}", i + 1),
                what,
            },
            other => other,
        })?;
        out.push((i + 1, cmd));
    }
    Ok(out)
}

/// Replays a script from a fresh hotel, calling `emit` with one
/// `<query> -> <answer>` line per query. Stops at the first failing query.
pub fn run_script(
    commands: &[(usize, ScriptCommand)],
    mut emit: impl FnMut(String),
) -> Result<HotelState> {
    let mut state = HotelState::new();
    for (_, cmd) in commands {
        match cmd {
            ScriptCommand::Event(e) => state = state.apply(e.clone()),
            ScriptCommand::RoomOf(g) => {
                let room = state.room_of(g)?;
                emit(format!("{cmd} -> {room}"));
            }
            ScriptCommand::Occupant(r) => {
                emit(format!("{cmd} -> {}", state.occupant_of(r)));
            }
        }
    }
    Ok(state)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn nat(n: u64) -> Natural {
        Natural::try_from(n).unwrap()
    }

    fn orig(n: u64) -> GuestId {
        GuestId::original(n).unwrap()
    }

    fn arr(b: u64, s: u64) -> GuestId {
        GuestId::arrival(b, s).unwrap()
    }

    #[test]
    fn one_arrival() {
        let h = HotelState::new().arrive_one();
        assert_eq!(h.room_of(&orig(3)).unwrap(), nat(4));
        assert_eq!(h.room_of(&orig(1)).unwrap(), nat(2));
        assert_eq!(h.occupant_of(&nat(1)), arr(1, 1));
        assert_eq!(h.occupant_of(&nat(2)), orig(1));
    }

    #[test]
    fn finite_arrivals() {
        let h = HotelState::new().arrive_finite_u64(346).unwrap();
        assert_eq!(h.room_of(&orig(1)).unwrap(), nat(347));
        let h3 = HotelState::new().arrive_finite_u64(3).unwrap();
        assert_eq!(h3.occupant_of(&nat(2)), arr(1, 2));
        assert_eq!(h3.occupant_of(&nat(4)), orig(1));
        assert!(h3.room_of(&arr(1, 4)).is_err());
        assert!(HotelState::new().arrive_finite_u64(0).is_err());

        let one = HotelState::new().arrive_one();
        let k1 = HotelState::new().arrive_finite_u64(1).unwrap();
        for r in 1..200 {
            assert_eq!(one.occupant_of(&nat(r)), k1.occupant_of(&nat(r)));
            assert_eq!(
                one.room_of(&orig(r)).unwrap(),
                k1.room_of(&orig(r)).unwrap()
            );
        }
    }

    #[test]
    fn bus_arrival() {
        let h = HotelState::new().arrive_bus();
        assert_eq!(h.room_of(&orig(5)).unwrap(), nat(10));
        assert_eq!(h.occupant_of(&nat(7)), arr(1, 4));
        assert_eq!(h.occupant_of(&nat(6)), orig(3));
        assert_eq!(h.occupant_of(&nat(9)), arr(1, 5));
        assert_eq!(h.room_of(&arr(1, 1)).unwrap(), nat(1));
    }

    #[test]
    fn composed_logs() {
        let empty = HotelState::new();
        assert_eq!(empty.room_of(&orig(42)).unwrap(), nat(42));
        assert_eq!(empty.occupant_of(&nat(42)), orig(42));
        let h = HotelState::new().arrive_one().arrive_bus();
        assert_eq!(h.room_of(&orig(3)).unwrap(), nat(8));
        assert_eq!(h.room_of(&arr(1, 1)).unwrap(), nat(2));
        assert_eq!(h.occupant_of(&nat(2)), arr(1, 1));
    }

    #[test]
    fn guest_text() {
        for g in [orig(12), arr(3, 400)] {
            assert_eq!(g.to_string().parse::<GuestId>().unwrap(), g);
        }
        assert!("arrival 1".parse::<GuestId>().is_err());
        assert!("original 0".parse::<GuestId>().is_err());
    }

    #[test]
    fn unknown_guests() {
        let h = HotelState::new().arrive_one();
        assert!(matches!(h.room_of(&arr(2, 1)), Err(Error::NoSuchGuest(_))));
        assert!(matches!(h.room_of(&arr(1, 2)), Err(Error::NoSuchGuest(_))));
    }

    #[test]
    fn parity_after_bus() {
        let h = HotelState::new().arrive_bus();
        for r in 1..=1000u64 {
            match h.occupant_of(&nat(r)) {
                GuestId::Original(_) => assert_eq!(r % 2, 0),
                GuestId::Arrival { .. } => assert_eq!(r % 2, 1),
            }
        }
    }

    #[test]
    fn script_roundtrip() {
        let script = "# demo\none\nroom-of original 3\nbus   # everyone doubles\nroom-of original 3\noccupant 7\nroom-of arrival 2 4\n\nfinite 2\noccupant 2\n";
        let cmds = parse_script(script).unwrap();
        let mut lines = Vec::new();
        run_script(&cmds, |l| lines.push(l)).unwrap();
        assert_eq!(
            lines,
            [
                "room-of original 3 -> 4",
                "room-of original 3 -> 8",
                "occupant 7 -> arrival 2 4",
                "room-of arrival 2 4 -> 7",
                "occupant 2 -> arrival 3 2",
            ]
        );
    }

    #[test]
    fn script_errors() {
        let err = parse_script("one\nteleport 3\n").unwrap_err();
        assert!(err.to_string().contains("line 2"), "{err}");
        assert!(parse_script("finite 0").is_err());
        let cmds = parse_script("room-of arrival 1 1").unwrap();
        assert!(matches!(
            run_script(&cmds, |_| {}),
            Err(Error::NoSuchGuest(_))
        ));
    }
}
