import math
import tempfile
import unittest
from pathlib import Path

import sys
sys.path.append('.')
from src.heckeutils.realization import Realization, RealizationError
from src.heckeutils.realizations import builtin, config, load_realization, realization_source
from src.heckeutils.realizations.builtin import BuiltinRealization
from src.heckeutils.realizations.config import TomlRealization
from src.heckeutils.realizations.base import from_config


DOCS = Path(__file__).resolve().parent.parent / 'docs'

GOLDEN_TOML = """
name = "golden"

[field]
kind = "number"
modulus = "x^2 - x - 1"
generator = "x"

[coxeter]
generators = ["s", "t"]
m = [[1, 5], [5, 1]]

[cartan]
"s,t" = "-x"
"t,s" = "-x"
"""


def _dihedral_config(m, a_st, a_ts):
    return {
        'coxeter': {'generators': ['s', 't'], 'm': [[1, m], [m, 1]]},
        'cartan': {'s,t': a_st, 't,s': a_ts},
    }


class TestRealization(unittest.TestCase):

    @classmethod
    def setUpClass(cls) -> None:
        # 初期化処理 - 1度のみ
        cls.a2 = builtin.load('A2')
        cls.b2 = builtin.load('B2')

    @classmethod
    def tearDownClass(cls) -> None:
        # 終了処理 - 1度のみ
        pass

    def setUp(self):
        # 初期化処理 - unittestごと
        self.tmpdir = tempfile.TemporaryDirectory()

    def tearDown(self):
        # 終了処理 - unittestごと
        self.tmpdir.cleanup()

    def test_builtins_are_valid(self):
        for name in builtin.builtin_names():
            r = builtin.load(name)
            self.assertIsInstance(r, Realization)
            self.assertEqual(r.name, name)
        self.assertIs(builtin.load('A2'), builtin.load('A2'))
        with self.assertRaises(RealizationError):
            builtin.load('E8')

    def test_invalid_realization(self):
        # m = 4 で a_st = a_ts = -1 だと [4] = -1
        with self.assertRaises(RealizationError):
            from_config(_dihedral_config(4, -1, -1))
        with self.assertRaises(RealizationError):
            from_config({'coxeter': {'generators': ['s', 't'], 'm': [[1, 3], [3, 1]]}, 'cartan': {}})
        with self.assertRaises(RealizationError):
            from_config({'cartan': {}})
        with self.assertRaises(RealizationError):
            from_config(dict(_dihedral_config(3, -1, -1), field={'kind': 'quaternion'}))
        with self.assertRaises(RealizationError):
            from_config(_dihedral_config(3, -1, 'not a number'))

    def test_action(self):
        r = self.a2
        a_s, a_t = r.alpha('s'), r.alpha('t')
        self.assertEqual(r.act_on_poly((0,), a_s), -a_s)
        self.assertEqual(r.act_on_poly((0,), a_t), a_s + a_t)
        self.assertEqual(r.act_on_poly((0, 0), a_t), a_t)
        # B2 では s(α_t) = α_t + 2 α_s, t(α_s) = α_s + α_t
        b = self.b2
        self.assertEqual(b.act_on_poly((0,), b.alpha('t')), b.alpha('t') + 2 * b.alpha('s'))
        self.assertEqual(b.act_on_poly((1,), b.alpha('s')), b.alpha('s') + b.alpha('t'))

    def test_pi_and_zeta(self):
        r = self.a2
        a_s, a_t = r.alpha('s'), r.alpha('t')
        self.assertEqual(r.pi('s', 't'), a_s * a_t * (a_s + a_t))
        self.assertEqual(r.pi('t', 's'), r.pi('s', 't'))
        self.assertEqual(r.zeta('s', 't', (1, 1, 1)), r.pi('s', 't'))
        self.assertEqual(r.zeta('s', 't', (0, 0, 0)), a_t * a_s * a_t)
        with self.assertRaises(RealizationError):
            r.zeta('s', 't', (1, 1))
        b = self.b2
        self.assertEqual(b.pi('s', 't').total_degree(), 4)

    def test_demazure(self):
        r = self.a2
        self.assertEqual(r.demazure('s', r.alpha('t')), -r.one())
        self.assertEqual(r.demazure('s', r.alpha('s')), 2 * r.one())
        self.assertEqual(self.b2.demazure('s', self.b2.alpha('t')), -2 * self.b2.one())
        self.assertTrue(r.demazure('s', r.alpha('s') * r.alpha('s')).is_zero())

    def test_balance(self):
        self.assertTrue(self.a2.is_balanced())
        self.assertTrue(self.b2.is_balanced())
        self.assertTrue(builtin.load('G2').is_balanced())
        q = builtin.load('I2_3_q')
        self.assertFalse(q.is_balanced())
        self.assertTrue(q.is_even_balanced())
        u = builtin.load('I2_6_unbalanced')
        self.assertFalse(u.is_balanced_pair('s', 't'))
        self.assertFalse(u.is_even_balanced())
        self.assertEqual(u.balance_scalar('s', 't'), (-1, -1))

    def test_order_on_span(self):
        self.assertEqual(self.a2.order_on_span('s', 't'), 3)
        self.assertTrue(self.b2.is_faithful_on_span('s', 't'))
        self.assertTrue(builtin.load('I2_5').is_faithful_on_span('s', 't'))
        nonfaithful = builtin.load('I2_9_nonfaithful')
        self.assertEqual(nonfaithful.order_on_span('s', 't'), 3)
        self.assertFalse(nonfaithful.is_faithful_on_span('s', 't'))
        self.assertEqual(builtin.load('I2_4_degenerate').order_on_span('s', 't'), 2)

    def test_infinite_pair(self):
        cfg = {'coxeter': {'generators': ['s', 't'], 'm': [[1, 'inf'], ['inf', 1]]},
               'cartan': {'s,t': -2, 't,s': -2}}
        r = from_config(cfg)
        self.assertTrue(math.isinf(r.order('s', 't')))
        with self.assertRaises(RealizationError):
            r.pi('s', 't')
        self.assertTrue(math.isinf(r.order_on_span('s', 't', bound=10)))

    def test_toml(self):
        path = Path(self.tmpdir.name) / 'golden.toml'
        path.write_text(GOLDEN_TOML, encoding='utf-8')
        r = config.load(path)
        self.assertEqual(r.name, 'golden')
        self.assertEqual(r.order('s', 't'), 5)
        self.assertTrue(r.is_faithful_on_span('s', 't'))
        self.assertEqual(load_realization(str(path)).name, 'golden')

    def test_realization_source(self):
        source = realization_source('A2')
        self.assertIsInstance(source, BuiltinRealization)
        self.assertIs(source.load(), builtin.load('A2'))
        self.assertIs(load_realization('A2'), builtin.load('A2'))
        path = Path(self.tmpdir.name) / 'golden.toml'
        path.write_text(GOLDEN_TOML, encoding='utf-8')
        source = realization_source(str(path))
        self.assertIsInstance(source, TomlRealization)
        self.assertEqual(source.path, path)
        self.assertEqual(source.load().order('s', 't'), 5)
        r = builtin.load('B2')
        self.assertIs(load_realization(r), r)
        # 組み込みにない名前はファイルとして扱う
        self.assertIsInstance(realization_source('A9'), TomlRealization)
        with self.assertRaises(RealizationError):
            load_realization('A9')

    def test_toml_errors(self):
        with self.assertRaises(RealizationError):
            config.load(Path(self.tmpdir.name) / 'missing.toml')
        path = Path(self.tmpdir.name) / 'broken.toml'
        path.write_text('[coxeter\n', encoding='utf-8')
        with self.assertRaises(RealizationError):
            config.load(path)

    def test_sample_files(self):
        for path in sorted((DOCS / 'realizations').glob('*.toml')):
            r = load_realization(str(path))
            self.assertIsInstance(r, Realization, path)


if __name__ == '__main__':
    unittest.main()
