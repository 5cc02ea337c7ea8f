"""JSON config validation: schema, families, grids, sweeps, thresholds."""
import json

import pytest

from tunnelkit import (
    BiasedQuartic,
    ConfigError,
    DoubleOscillator,
    Mirrored,
    Polynomial,
    load_config,
    parse_config,
)


def minimal(**extra):
    doc = {
        "schema": "tunnelkit/1",
        "potential": {"family": "biased_quartic", "alpha": 1.0, "a": 2.1},
    }
    doc.update(extra)
    return doc


class TestSchema:
    def test_minimal_document_parses(self):
        cfg = parse_config(minimal())
        assert cfg.potential == BiasedQuartic(1.0, 2.1, 0.0)
        assert cfg.sweep is None
        assert cfg.oracle_grid is None
        assert cfg.orient == "auto"

    def test_json_text_is_accepted(self):
        cfg = parse_config(json.dumps(minimal()))
        assert cfg.potential == BiasedQuartic(1.0, 2.1, 0.0)

    def test_missing_schema(self):
        doc = minimal()
        del doc["schema"]
        with pytest.raises(ConfigError, match='"schema"'):
            parse_config(doc)

    def test_wrong_schema_version(self):
        with pytest.raises(ConfigError, match="tunnelkit/99"):
            parse_config(minimal(schema="tunnelkit/99"))

    def test_missing_potential(self):
        with pytest.raises(ConfigError, match='"potential"'):
            parse_config({"schema": "tunnelkit/1"})

    def test_unknown_top_level_key_is_named_in_the_error(self):
        with pytest.raises(ConfigError, match='"sweeps"'):
            parse_config(minimal(sweeps={}))

    def test_invalid_json_text(self):
        with pytest.raises(ConfigError, match="not valid JSON"):
            parse_config("{this is not json")

    def test_non_finite_numbers_are_rejected(self):
        with pytest.raises(ConfigError, match="[Nn]on-finite|NaN"):
            parse_config(
                '{"schema": "tunnelkit/1", "potential": '
                '{"family": "biased_quartic", "alpha": NaN, "a": 2.0}}'
            )


class TestPotentialBlock:
    def test_quartic_defaults(self):
        cfg = parse_config(minimal())
        assert cfg.potential.beta == 0.0

    def test_double_oscillator(self):
        cfg = parse_config(
            {
                "schema": "tunnelkit/1",
                "potential": {
                    "family": "double_oscillator",
                    "omega_L": 1.0,
                    "omega_R": 1.3,
                    "tilde_eps": 0.05,
                    "V0": 9.0,
                },
            }
        )
        assert cfg.potential == DoubleOscillator(1.0, 1.3, 0.05, 9.0)

    def test_polynomial_with_window(self):
        cfg = parse_config(
            {
                "schema": "tunnelkit/1",
                "potential": {
                    "family": "polynomial",
                    "coeffs": [0.8, 0.0, -1.4, 0.0, 0.4, 0.0, 0.2],
                    "window": [-1.8, 1.8],
                },
            }
        )
        assert isinstance(cfg.potential, Polynomial)
        assert cfg.potential.window == (-1.8, 1.8)

    def test_mirror_flag_wraps_the_potential(self):
        doc = minimal()
        doc["potential"]["mirror"] = True
        cfg = parse_config(doc)
        assert isinstance(cfg.potential, Mirrored)

    def test_orient_keep(self):
        doc = minimal()
        doc["potential"]["orient"] = "keep"
        assert parse_config(doc).orient == "keep"

    def test_orient_rejects_other_words(self):
        doc = minimal()
        doc["potential"]["orient"] = "flip"
        with pytest.raises(ConfigError, match='"orient"'):
            parse_config(doc)

    def test_unknown_family(self):
        doc = minimal()
        doc["potential"]["family"] = "cubic"
        with pytest.raises(ConfigError, match="cubic"):
            parse_config(doc)

    def test_unknown_potential_key_is_named(self):
        doc = minimal()
        doc["potential"]["curvature"] = 2.0
        with pytest.raises(ConfigError, match='"curvature"'):
            parse_config(doc)

    def test_family_parameter_must_be_a_number(self):
        doc = minimal()
        doc["potential"]["alpha"] = "one"
        with pytest.raises(ConfigError, match='"alpha"'):
            parse_config(doc)

    def test_invalid_physical_parameters_fail_validation(self):
        doc = minimal()
        doc["potential"]["alpha"] = -1.0
        with pytest.raises(ConfigError):
            parse_config(doc)


class TestOptionalBlocks:
    def test_oracle_grid(self):
        cfg = parse_config(
            minimal(
                oracle_grid={
                    "x_min": -4.8,
                    "x_max": 4.8,
                    "n_points": 8001,
                    "richardson": True,
                }
            )
        )
        assert cfg.oracle_grid.x_min == -4.8
        assert cfg.oracle_grid.n_points == 8001
        assert cfg.oracle_grid.richardson is True

    def test_sweep_block(self):
        cfg = parse_config(
            minimal(
                sweep={"parameter": "tilde_eps", "from": 0.0, "to": 0.3, "steps": 11}
            )
        )
        assert cfg.sweep.parameter == "tilde_eps"
        assert cfg.sweep.start == 0.0
        assert cfg.sweep.stop == 0.3
        assert cfg.sweep.steps == 11

    def test_sweep_rejects_other_parameters(self):
        with pytest.raises(ConfigError, match="tilde_eps"):
            parse_config(
                minimal(
                    sweep={"parameter": "alpha", "from": 0.0, "to": 1.0, "steps": 3}
                )
            )

    def test_sweep_steps_must_be_an_integer(self):
        with pytest.raises(ConfigError, match='"steps"'):
            parse_config(
                minimal(
                    sweep={
                        "parameter": "tilde_eps",
                        "from": 0.0,
                        "to": 1.0,
                        "steps": 2.5,
                    }
                )
            )

    def test_constants_block(self):
        cfg = parse_config(minimal(constants={"hbar": 2.0, "mass": 0.5}))
        assert cfg.constants.hbar == 2.0
        assert cfg.constants.mass == 0.5

    def test_tolerances_block(self):
        cfg = parse_config(minimal(tolerances={"quad_rtol": 1e-10}))
        assert cfg.tolerances.quad_rtol == 1e-10
        with pytest.raises(ConfigError, match="quad_rtol"):
            parse_config(minimal(tolerances={"quad_rtol": 0.5}))

    def test_validity_thresholds_block(self):
        cfg = parse_config(
            minimal(
                validity_thresholds={"max_eps_over_hw": 0.3, "max_gamow": 0.05}
            )
        )
        assert cfg.validity_thresholds.max_eps_over_hw == 0.3
        assert cfg.validity_thresholds.max_gamow == 0.05

    def test_defaults_for_thresholds(self):
        cfg = parse_config(minimal())
        assert cfg.validity_thresholds.max_eps_over_hw == 0.2
        assert cfg.validity_thresholds.max_gamow == 1e-2
        assert cfg.tolerances.quad_rtol == 1e-12


class TestLoadConfig:
    def test_round_trip_through_a_file(self, tmp_path):
        path = tmp_path / "run.json"
        path.write_text(json.dumps(minimal()))
        cfg = load_config(path)
        assert cfg.potential == BiasedQuartic(1.0, 2.1, 0.0)

    def test_missing_file(self, tmp_path):
        with pytest.raises(ConfigError, match="cannot read"):
            load_config(tmp_path / "absent.json")
