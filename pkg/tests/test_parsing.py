import random
import pytest
from fractions import Fraction

from commands import build_pair, parse_rational, parse_space_spec, resolve_mu, serialize_space_spec
from engine.errors import EXIT_USAGE, NotARoot, ParseError, UnsupportedSeries
from model import SpaceSpec, weight


class TestParseSpaceSpec:
    def test_six_sphere(self):
        """Test the S^6 query with a half-spin mu."""
        spec = parse_space_spec("B3/D3;mu=1/2,1/2,1/2")
        assert spec.series == "B"
        assert spec.rank == 3
        assert spec.eta_name == "D3"
        assert spec.eta_roots is None
        assert spec.mu == weight("1/2", "1/2", "1/2")
        assert spec.scale == 1

    def test_sphere_functions(self):
        """Test the round 2-sphere with the trivial bundle."""
        spec = parse_space_spec("B1/torus;mu=0")
        assert (spec.series, spec.rank, spec.eta_name, spec.mu) == ("B", 1, "torus", weight(0))

    def test_roots_and_scale(self):
        """Test explicit generators and a Landau prefactor."""
        spec = parse_space_spec("B2/roots:1,1;mu=1,-1;scale=3/4")
        assert spec.eta_roots == (weight(1, 1),)
        assert spec.mu == weight(1, -1)
        assert spec.scale == Fraction(3, 4)

    def test_several_roots(self):
        """Test a root list separated by bars."""
        spec = parse_space_spec("B3/roots:1,-1,0|0,0,1")
        assert spec.eta_roots == (weight(1, -1, 0), weight(0, 0, 1))

    def test_g2_named(self):
        """Test the G2 head without a separate rank."""
        spec = parse_space_spec("G2/A1xA1")
        assert (spec.series, spec.rank, spec.eta_name, spec.mu) == ("G2", 2, "A1xA1", None)

    def test_exceptional_rejected(self):
        """Test that E8 is refused with an explanation."""
        with pytest.raises(UnsupportedSeries) as exc:
            parse_space_spec("E8/D8")
        assert "E and F" in exc.value.detail

    @pytest.mark.parametrize(
        "text,position",
        [
            ("B3-D3", 5),
            ("b3/D3", 0),
            ("B/D3", 1),
            ("B3/D2", 3),
            ("B2/A2", 3),
            ("B3/D3;mu=1/2,x", 13),
            ("B3/D3;mu=0.5,0,0", 9),
            ("B3/D3;nu=1", 6),
            ("B3/D3;mu=1,0,0;mu=1,0,0", 15),
            ("B1/torus;scale=1/0", 15),
            ("B2/roots:", 9),
        ],
    )
    def test_parse_error_position(self, text, position):
        """Test that malformed queries report where they go wrong."""
        with pytest.raises(ParseError) as exc:
            parse_space_spec(text)
        assert exc.value.position == position
        assert exc.value.exit_code == EXIT_USAGE

    def test_parse_rational(self):
        """Test p, -p and p/q; decimals are refused."""
        assert parse_rational("7") == 7
        assert parse_rational("-3/6") == Fraction(-1, 2)
        with pytest.raises(ParseError):
            parse_rational("0.5")


class TestSerialize:
    def test_omits_defaults(self):
        """Test that an absent mu and a unit scale are not written."""
        assert serialize_space_spec(parse_space_spec("B2/D2;scale=1")) == "B2/D2"

    def test_canonical_text(self):
        """Test that canonical queries come back unchanged."""
        for text in ("B3/D3;mu=1/2,1/2,1/2", "G2/A2;mu=0,1;scale=2/3", "B2/roots:1,1|0,1;mu=-1,0", "A2/torus"):
            assert serialize_space_spec(parse_space_spec(text)) == text

    def test_round_trip_random(self):
        """Test parse(serialize(spec)) == spec over random valid specs."""
        rng = random.Random(20240)

        def rational():
            return Fraction(rng.randint(-9, 9), rng.randint(1, 6))

        heads = [("A", 1), ("A", 3), ("B", 2), ("B", 4), ("C", 3), ("D", 4), ("G2", 2)]
        for _ in range(200):
            series, rank = rng.choice(heads)
            dim = rank + 1 if series == "A" else rank
            names = ["full", "torus"]
            if series == "B" and rank >= 2:
                names.append(f"D{rank}")
            if series == "G2":
                names += ["A1xA1", "A2"]
            if rng.random() < 0.4:
                eta = {"eta_roots": tuple(tuple(rational() for _ in range(dim)) for _ in range(rng.randint(1, 3)))}
            else:
                eta = {"eta_name": rng.choice(names)}
            mu = tuple(rational() for _ in range(dim)) if rng.random() < 0.7 else None
            scale = Fraction(rng.randint(1, 9), rng.randint(1, 9))
            spec = SpaceSpec(series=series, rank=rank, mu=mu, scale=scale, **eta)
            assert parse_space_spec(serialize_space_spec(spec)) == spec


class TestBuildPair:
    def test_named_d_subalgebra(self):
        """Test that D3 inside B3 is generated by the long simple roots."""
        pair = build_pair(parse_space_spec("B3/D3"))
        assert pair.eta.label == "D3"
        assert len(pair.eta.positive_roots) == 6
        assert pair.m_positive_roots == (weight(0, 0, 1), weight(0, 1, 0), weight(1, 0, 0))

    def test_g2_subalgebras(self):
        """Test the G2 named subalgebras."""
        assert len(build_pair(parse_space_spec("G2/A1xA1")).eta.positive_roots) == 2
        assert len(build_pair(parse_space_spec("G2/A2")).eta.positive_roots) == 3

    def test_default_mu(self):
        """Test that a missing mu means the trivial eta-type."""
        spec = parse_space_spec("B2/D2")
        assert resolve_mu(spec, build_pair(spec)) == weight(0, 0)

    def test_bad_root(self):
        """Test a generator that is not a root of g."""
        with pytest.raises(NotARoot):
            build_pair(parse_space_spec("B2/roots:2,0"))
