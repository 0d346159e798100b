import json
import tempfile
import unittest
from pathlib import Path

import sys
sys.path.append('.')
from src.heckeutils.algebra import Frac
from src.heckeutils.groupoid import degree_check
from src.heckeutils.heckediag import (
    Cap, Cup, DiagramError, DotBottom, DotTop, EStar, HComp, Id, JWPrime, Localizer, Merge, PolyBox,
    Scaled, Split, Sum, VComp, Vertex2m,
    all_dots, chain, compile_jw_box, degree, from_json, layer, load_diagram, localize, pitchfork_at, sigma,
    tensor, to_json, vertex_from_estar,
)
from src.heckeutils.realizations import builtin
from src.heckeutils.tl2 import NotRotatable, identity_matching


DOCS = Path(__file__).resolve().parent.parent / 'docs'


class TestHeckeDiag(unittest.TestCase):

    @classmethod
    def setUpClass(cls) -> None:
        # 初期化処理 - 1度のみ
        cls.a1 = builtin.load('A1')
        cls.a2 = builtin.load('A2')
        cls.b2 = builtin.load('B2')
        cls.a1xa1 = builtin.load('A1xA1')

    @classmethod
    def tearDownClass(cls) -> None:
        # 終了処理 - 1度のみ
        pass

    def setUp(self):
        # 初期化処理 - unittestごと
        self.loc = Localizer(self.a1)
        self.alpha = Frac(self.a1.alpha('s'))

    def tearDown(self):
        # 終了処理 - unittestごと
        pass

    def test_one_color_generators(self):
        loc, a = self.loc, self.alpha
        self.assertEqual(loc.gen_matrix(DotTop('s')).entry((), (0,)), a)
        self.assertTrue(loc.gen_matrix(DotBottom('s')).entry((0,), ()).is_one())
        split = loc.gen_matrix(Split('s'))
        self.assertEqual(split.shape, (4, 2))
        self.assertEqual(split.entry((1, 0), (1,)), -a.inverse())
        self.assertEqual(split.entry((0, 0), (0,)), a.inverse())
        merge = loc.gen_matrix(Merge('s'))
        self.assertEqual(len(merge.entries), 4)
        self.assertEqual(loc.gen_matrix(Cup('s')).entry((1, 1), ()), -a.inverse())
        self.assertEqual(loc.gen_matrix(Cap('s')).entry((), (1, 1)), a)
        self.assertIs(loc.gen_matrix(Cap('s')), loc.gen_matrix(Cap('s')))

    def test_small_relations(self):
        loc, a = self.loc, self.alpha
        barbell = loc.evaluate(chain(DotBottom('s'), DotTop('s')))
        self.assertEqual(barbell.entry((), ()), a)
        # 針 (Split の後に Merge) は 0
        self.assertTrue(loc.evaluate(chain(Split('s'), Merge('s'))).is_zero())
        # 円は 0
        self.assertTrue(loc.evaluate(chain(Cup('s'), Cap('s'))).is_zero())

    def test_tensor_twist(self):
        m = localize(tensor(Id(('s',)), DotTop('s')), self.a1)
        self.assertEqual(m.entry((1,), (1, 0)), -self.alpha)
        self.assertEqual(m.entry((0,), (0, 0)), self.alpha)

    def test_polynomial_box(self):
        r = self.a1
        f = r.alpha('s') * r.alpha('s')
        m = localize(PolyBox(f), r)
        self.assertEqual(m.entry((), ()), Frac(f))
        self.assertEqual(degree(PolyBox(f)), 4)
        self.assertIsNone(degree(PolyBox(f + 1)))

    def test_vertex_m2(self):
        r = self.a1xa1
        m = localize(Vertex2m('s', 't', 2), r)
        self.assertEqual(len(m.entries), 4)
        self.assertTrue(all(v.is_one() for v in m.entries.values()))
        self.assertTrue(m.entry((1, 0), (0, 1)).is_one())

    def test_vertex_m3(self):
        r = self.a2
        a_s, a_t = r.alpha('s'), r.alpha('t')
        m = localize(Vertex2m('s', 't', 3), r)
        self.assertTrue(m.entry((1, 1, 1), (1, 1, 1)).is_one())
        self.assertEqual(m.entry((0, 0, 0), (0, 0, 0)), Frac(a_s + a_t, a_t))
        self.assertEqual(m, localize(vertex_from_estar('s', 't', 3), r))
        self.assertTrue(degree_check(m, 0))

    def test_estar(self):
        r = self.a2
        m = localize(EStar('s', 't', 3), r)
        ids = [j for j, x in enumerate(m.source.endpoints) if x.is_identity()]
        self.assertEqual(sorted(j for _, j in m.entries), ids)
        self.assertTrue(all(v == Frac(r.pi('s', 't')) for v in m.entries.values()))

    def test_jwprime(self):
        # 端点が単位元の列はすべて π_{s,t}、それ以外は 0
        for r in (self.a2, self.b2):
            m = localize(JWPrime('s', 't', int(r.order('s', 't'))), r)
            pi = Frac(r.pi('s', 't'))
            for j, x in enumerate(m.source.endpoints):
                value = m.entry((), j)
                if x.is_identity():
                    self.assertEqual(value, pi, (r.name, m.source.label(j)))
                else:
                    self.assertTrue(value.is_zero(), (r.name, m.source.label(j)))
            self.assertTrue(degree_check(m, 1))

    def test_jw_box(self):
        # 1 本目を三価頂点で分けて右端へ回すと JW'
        for r in (self.a2, self.b2):
            m = int(r.order('s', 't'))
            box = compile_jw_box('s', 't', m, None, r)
            self.assertEqual(len(box.source), 2 * m - 2)
            self.assertEqual(box.target, ())
            self.assertEqual(degree(box), 2)
            mat = localize(box, r)
            self.assertTrue(degree_check(mat, 2))
            wrapped = chain(
                tensor(Split('s'), Id(box.source[1:]), Id(('s',))),
                layer(('s',), box, ('s',)),
                Cap('s'),
            )
            self.assertEqual(localize(wrapped, r), localize(JWPrime('s', 't', m), r), r.name)
            # すべての線に点を付けると π_{s,t}
            self.assertEqual(localize(chain(all_dots(box.source), box), r), localize(PolyBox(r.pi('s', 't')), r))

    def test_pair_errors(self):
        with self.assertRaises(DiagramError):
            localize(Vertex2m('s', 't', 4), self.a2)
        with self.assertRaises(NotRotatable):
            localize(Vertex2m('s', 't', 4), builtin.load('I2_4_degenerate'))
        m = localize(Vertex2m('s', 't', 4), builtin.load('I2_4_degenerate_F2'))
        self.assertEqual(m.shape, (16, 16))

    def test_construction_errors(self):
        with self.assertRaises(DiagramError):
            VComp(Cap('s'), Cup('t'))
        with self.assertRaises(DiagramError):
            Vertex2m('s', 's', 3)
        with self.assertRaises(DiagramError):
            Vertex2m('s', 't', 1)
        with self.assertRaises(DiagramError):
            EStar('s', 't', 3, 'u')
        with self.assertRaises(DiagramError):
            Sum((Cap('s'), Cup('s')), ('s', 's'), ())
        with self.assertRaises(DiagramError):
            pitchfork_at(('s', 't', 't'), 0)
        with self.assertRaises(DiagramError):
            chain()

    def test_degree(self):
        self.assertEqual(degree(DotTop('s')), 1)
        self.assertEqual(degree(Merge('s')), -1)
        self.assertEqual(degree(chain(Split('s'), Merge('s'))), -2)
        self.assertEqual(degree(Vertex2m('s', 't', 3)), 0)
        self.assertEqual(degree(JWPrime('s', 't', 3)), 1)
        self.assertEqual(degree(all_dots(('s', 't', 's'))), 3)
        self.assertIsNone(degree(Id(('s', 's')) + chain(Merge('s'), Split('s'))))
        self.assertEqual(degree(Scaled(self.a1.alpha('s'), Id(('s',)))), 2)

    def test_builders(self):
        w = ('s', 't', 's')
        self.assertEqual(sigma(identity_matching(2), w), Id(w))
        fork = pitchfork_at(('t', 's', 't', 's'), 1)
        self.assertEqual(fork.source, ('t', 's'))
        self.assertEqual(fork.target, ('t', 's', 't', 's'))
        self.assertEqual(layer(('s',), Cap('t'), ('s',)).source, ('s', 't', 't', 's'))
        self.assertIsInstance(tensor(DotTop('s'), DotTop('t')), HComp)
        self.assertEqual(tensor(Id(()), DotTop('s')), DotTop('s'))

    def test_json(self):
        r = self.a2
        d = chain(Split('s'), tensor(Id(('s',)), DotTop('s')), 2 * Id(('s',)))
        again = from_json(json.loads(json.dumps(to_json(d, r))), r)
        self.assertEqual(localize(again, r), localize(d, r))
        data = {
            'type': 'chain',
            'layers': [
                {'type': 'gen', 'name': 'PolyBox', 'poly': 'alpha_s*alpha_t + alpha_t^2'},
                {'type': 'tensor', 'factors': [
                    {'type': 'gen', 'name': 'DotBottom', 'color': 't'},
                ]},
            ],
        }
        d = from_json(data, r)
        self.assertEqual(d.target, ('t',))
        m = localize(d, r)
        expected = Frac(r.alpha('s') * r.alpha('t') + r.alpha('t') * r.alpha('t'))
        self.assertEqual(m.entry((0,), ()), expected)

    def test_json_errors(self):
        r = self.a2
        with self.assertRaises(DiagramError):
            from_json({'type': 'gen', 'name': 'Trivalent', 'color': 's'}, r)
        with self.assertRaises(DiagramError):
            from_json({'type': 'gen', 'name': 'DotTop'}, r)
        with self.assertRaises(DiagramError):
            from_json({'type': 'braid'}, r)
        with self.assertRaises(DiagramError):
            from_json({'type': 'gen', 'name': 'PolyBox', 'poly': 'alpha_s +* 1'}, r)

    def test_load_diagram(self):
        with tempfile.TemporaryDirectory() as tmpdir:
            path = Path(tmpdir) / 'needle.json'
            path.write_text(json.dumps(to_json(chain(Split('s'), Merge('s')))), encoding='utf-8')
            d = load_diagram(path, self.a2)
            self.assertTrue(localize(d, self.a2).is_zero())
        for path in sorted((DOCS / 'diagrams').glob('*.json')):
            d = load_diagram(path, self.a2)
            self.assertEqual(localize(d, self.a2).shape[1], 2 ** len(d.source), path)


if __name__ == '__main__':
    unittest.main()
