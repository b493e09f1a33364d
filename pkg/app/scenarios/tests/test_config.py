from django.conf import settings
from django.test import SimpleTestCase

from scenarios.choices import SweepAxis
from scenarios.config import (
    apply_overrides,
    check_axis,
    key_lines,
    parse_config,
    point_config,
)
from utils.exceptions import ConfigurationError

MINIMAL = """\
model:
  family: exp_cutoff
  alpha0: 1.0
analyses: [regimes]
"""


class ParseConfigTests(SimpleTestCase):
    """Test loading and validating scenario files"""

    def test_defaults(self):
        """Test that omitted sections take their documented defaults"""
        config = parse_config(MINIMAL)

        self.assertEqual(config["name"], "scenario")
        self.assertEqual(config["output"], "results")
        self.assertEqual(config["tolerance"], settings.QUADRATURE_RTOL)
        self.assertEqual(config["dephasing"]["temperatures"], [0.0])
        self.assertEqual(config["grid"]["kind"], "log")
        self.assertEqual(config["info_flow"]["t_max"], settings.INFO_FLOW_T_MAX)
        self.assertEqual(config["preparation"]["z"], 0.0)
        self.assertIs(type(config["model"]["family"]), str)

    def test_validated_config_validates_again(self):
        """Test that an effective configuration is accepted unchanged"""
        config = parse_config(MINIMAL)
        self.assertEqual(apply_overrides(config), config)

    def test_unknown_key_reports_line(self):
        """Test that a misspelt key is rejected with its file and line"""
        text = MINIMAL.replace("  alpha0: 1.0\n", "  alpha0: 1.0\n  colour: blue\n")

        with self.assertRaises(ConfigurationError) as ctx:
            parse_config(text, source="bad.yaml")

        self.assertIn("model.colour", ctx.exception.errors)
        self.assertEqual(str(ctx.exception), "bad.yaml:4: model.colour: Unknown key.")

    def test_invalid_yaml_reports_line(self):
        """Test that malformed YAML is reported with a line number"""
        text = "model:\n  family: exp_cutoff\n alpha0: 1.0\n"

        with self.assertRaises(ConfigurationError) as ctx:
            parse_config(text, source="bad.yaml")

        self.assertRegex(str(ctx.exception), r"^bad\.yaml:\d+: invalid YAML")

    def test_rejections(self):
        """Test cross-field rules of the scenario file"""
        cases = {
            "missing alpha0": "model:\n  family: exp_cutoff\nanalyses: [regimes]\n",
            "log power on exp": (
                "model:\n  family: exp_cutoff\n  alpha0: 1\n  log_power: 1\n"
                "analyses: [regimes]\n"
            ),
            "mellin on log": (
                "model:\n  family: log_exp_cutoff\n  alpha0: 1\n  log_power: 1\n"
                "analyses: [mellin_check]\n"
            ),
            "repeated analysis": MINIMAL.replace("[regimes]", "[regimes, regimes]"),
            "tolerance": MINIMAL + "tolerance: 2.0\n",
            "energy without modes": MINIMAL + "preparation:\n  epsilon_env: 0.0\n",
            "z out of range": MINIMAL + "preparation:\n  z: 1.5\n",
            "empty analyses": MINIMAL.replace("[regimes]", "[]"),
            "reversed grid": MINIMAL + "grid:\n  start: 10\n  stop: 1\n",
            "general without terms": "model:\n  family: class1\nanalyses: [regimes]\n",
        }
        for label, text in cases.items():
            with self.subTest(label):
                with self.assertRaises(ConfigurationError):
                    parse_config(text)

    def test_general_model(self):
        """Test a class-1 model given through its terms"""
        config = parse_config(
            "model:\n  family: class1\n  terms:\n    - {alpha: 3, log_power: 0, coeff: 1}\n"
            "    - {alpha: 4}\nanalyses: [regimes]\n"
        )
        self.assertEqual(len(config["model"]["terms"]), 2)
        self.assertEqual(config["model"]["terms"][1]["coeff"], 1.0)

    def test_class2_negative_log_power(self):
        """Test that class-2 models accept real log powers of either sign"""
        config = parse_config(
            "model:\n  family: log_exp_cutoff\n  alpha0: 2\n  log_power: -1\n"
            "  log_class: class2\nanalyses: [regimes]\n"
        )
        self.assertEqual(config["model"]["log_power"], -1.0)

        config = parse_config(
            "model:\n  family: class2\n  terms: [{alpha: 2, log_power: -0.5}]\n"
            "analyses: [regimes]\n"
        )
        self.assertEqual(config["model"]["terms"][0]["log_power"], -0.5)

    def test_class1_log_power_must_be_natural(self):
        """Test that class-1 log powers outside 0, 1, 2, ... are rejected"""
        for power in ("0.5", "-1"):
            text = (
                f"model:\n  family: log_exp_cutoff\n  alpha0: 2\n  log_power: {power}\n"
                "analyses: [regimes]\n"
            )
            with self.subTest(power=power):
                with self.assertRaises(ConfigurationError) as ctx:
                    parse_config(text)
                self.assertIn("model.log_power", ctx.exception.errors)

        with self.assertRaises(ConfigurationError) as ctx:
            parse_config(
                "model:\n  family: class1\n  terms:\n    - {alpha: 2}\n"
                "    - {alpha: 3, log_power: 1.5}\nanalyses: [regimes]\n"
            )
        self.assertIn("Term 1", ctx.exception.errors["model.terms"][0])

    def test_key_lines(self):
        """Test the line lookup of nested keys and list items"""
        lines = key_lines(MINIMAL)
        self.assertEqual(lines["model"], 1)
        self.assertEqual(lines["model.alpha0"], 3)
        self.assertEqual(lines["analyses"], 4)


class SweepConfigTests(SimpleTestCase):
    """Test the per-point configurations of a sweep"""

    def setUp(self):
        self.config = parse_config(
            MINIMAL + "dephasing:\n  temperatures: [0.0, 1.0]\n"
            "sweep:\n  axis: alpha0\n  values: [2.0, 3.0]\n"
        )

    def test_point_config(self):
        """Test that each axis lands in its own key and the sweep is dropped"""
        point = point_config(self.config, SweepAxis.ALPHA0, 2.5, "out/alpha0_000")
        self.assertEqual(point["model"]["alpha0"], 2.5)
        self.assertEqual(point["output"], "out/alpha0_000")
        self.assertNotIn("sweep", point)

        point = point_config(self.config, SweepAxis.TEMPERATURE, 0.5, "out")
        self.assertEqual(point["dephasing"]["temperatures"], [0.5])

        point = point_config(self.config, SweepAxis.PREP_TEMPERATURE, 4.0, "out")
        self.assertEqual(point["preparation"]["temperature"], 4.0)

        self.assertEqual(self.config["model"]["alpha0"], 1.0)

    def test_invalid_point(self):
        """Test that a value outside the domain of its key is rejected"""
        with self.assertRaises(ConfigurationError):
            point_config(self.config, SweepAxis.Z, 2.0, "out")

    def test_check_axis(self):
        """Test axes that the model family does not expose"""
        check_axis(self.config, SweepAxis.ALPHA0)
        with self.assertRaises(ConfigurationError):
            check_axis(self.config, SweepAxis.LOG_POWER)

        general = parse_config(
            "model:\n  family: class2\n  terms: [{alpha: 2}]\nanalyses: [regimes]\n"
        )
        with self.assertRaises(ConfigurationError):
            check_axis(general, SweepAxis.ALPHA0)
