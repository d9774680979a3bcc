#!/usr/bin/env python3
# Copyright 2026 The paramspec Authors.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Writes the bundled data sets under data/.

Every sentence comes from a small template that knows both its raw wording
and its normalized token sequence, so the dependency trees can be written by
hand (UD style heads) instead of running an external parser. The C++ test
suite re-normalizes each raw sentence and checks the forms line up.

Usage: gen_fixtures.py [DATA_DIR]
"""

import json
import os
import sys

LEMMAS = {
    "types": "type",
    "needs": "need",
    "defaults": "default",
    "zeros": "zero",
    "has": "have",
    "is": "be",
    "values": "value",
    "elements": "element",
    "segments": "segment",
    "classes": "class",
    "rows": "row",
}


def tok(form, head, rel):
    return (form, head, rel)


def ticks(s):
    return "`" + s + "`"


def dtype_list(dts, conj="or"):
    q = [ticks(d) for d in dts]
    if len(q) == 1:
        return q[0]
    if len(q) == 2:
        return q[0] + " " + conj + " " + q[1]
    return ", ".join(q[:-1]) + ", " + conj + " " + q[-1]


class S:
    """One sentence: raw text, tree tokens, abstract annotation, concrete truth."""

    def __init__(self, raw, toks, ann=None, truth=None):
        self.raw = raw
        self.toks = toks
        self.ann = ann or {}
        self.truth = truth or {}


# Structure surfaces and their canonical names.
STRUCT = {"`Tensor`": "tensor", "list": "list", "tuple": "tuple", "array": "tensor"}
# Dtype surface (as written inside backquotes) to canonical.
DT = {"float": "float", "float16": "float16", "float32": "float32", "float64": "float64",
      "half": "float16", "double": "float64", "int32": "int32", "int64": "int64",
      "int": "int", "ints": "int", "bool": "bool", "string": "string", "uint8": "uint8",
      "bfloat16": "bfloat16", "complex64": "complex64", "floats": "float", "int8": "int8"}


def _canon_dts(dts):
    return sorted({DT[d] for d in dts})


def _ndim_prefix(n):
    return "" if n is None else " %d-D" % n


def of_type(ds, dts, n=None, article="A"):
    # a [N d] D_STRUCTURE of type D_TYPE
    pre = _ndim_prefix(n)
    raw = "%s%s %s of type %s." % (article, pre, ds, dtype_list(dts))
    if n is None:
        toks = [tok("a", 2, "det"), tok("D_STRUCTURE", 0, "root"), tok("of", 4, "case"),
                tok("type", 2, "nmod"), tok("D_TYPE", 4, "compound")]
    else:
        toks = [tok("a", 4, "det"), tok("CONSTANT_NUM", 3, "nummod"), tok("d", 4, "amod"),
                tok("D_STRUCTURE", 0, "root"), tok("of", 6, "case"), tok("type", 4, "nmod"),
                tok("D_TYPE", 6, "compound")]
    ann = {"structure": ["D_STRUCTURE"], "dtype": ["D_TYPE"]}
    truth = {"structure": [STRUCT[ds]], "dtype": _canon_dts(dts)}
    if n is not None:
        ann["ndim"] = ["CONSTANT_NUM"]
        truth["ndim"] = [n]
    return S(raw, toks, ann, truth)


def of_type_with_shape(ds, dts, shape):
    # a D_STRUCTURE of type D_TYPE with shape SHAPE
    raw = "A %s of type %s with shape [%s]." % (ds, dtype_list(dts), ", ".join(shape))
    toks = [tok("a", 2, "det"), tok("D_STRUCTURE", 0, "root"), tok("of", 4, "case"),
            tok("type", 2, "nmod"), tok("D_TYPE", 4, "compound"), tok("with", 7, "case"),
            tok("shape", 2, "nmod"), tok("SHAPE", 7, "appos")]
    ann = {"structure": ["D_STRUCTURE"], "dtype": ["D_TYPE"], "shape": ["SHAPE"]}
    truth = {"structure": [STRUCT[ds]], "dtype": _canon_dts(dts),
             "shape": ["[" + ",".join(shape) + "]"]}
    return S(raw, toks, ann, truth)


def must_type(dts):
    raw = "Must be of type %s." % dtype_list(dts)
    toks = [tok("must", 4, "aux"), tok("be", 4, "cop"), tok("of", 4, "case"),
            tok("type", 0, "root"), tok("D_TYPE", 4, "compound")]
    return S(raw, toks, {"dtype": ["D_TYPE"]}, {"dtype": _canon_dts(dts)})


def one_of_types(dts):
    raw = "Must be one of the following types: %s." % ", ".join(ticks(d) for d in dts)
    toks = [tok("must", 3, "aux"), tok("be", 3, "cop"), tok("one", 0, "root"),
            tok("of", 7, "case"), tok("the", 7, "det"), tok("following", 7, "amod"),
            tok("types", 3, "nmod"), tok(":", 9, "punct"), tok("D_TYPE", 7, "appos")]
    return S(raw, toks, {"dtype": ["D_TYPE"]}, {"dtype": _canon_dts(dts)})


def list_of(ds, dt):
    raw = "A %s of %s." % (ds, ticks(dt))
    toks = [tok("a", 2, "det"), tok("D_STRUCTURE", 0, "root"), tok("of", 4, "case"),
            tok("D_TYPE", 2, "nmod")]
    return S(raw, toks, {"structure": ["D_STRUCTURE"], "dtype": ["D_TYPE"]},
             {"structure": [STRUCT[ds]], "dtype": [DT[dt]]})


def plain(ds, n=None):
    pre = _ndim_prefix(n)
    raw = "A%s %s." % (pre, ds)
    if n is None:
        toks = [tok("a", 2, "det"), tok("D_STRUCTURE", 0, "root")]
        return S(raw, toks, {"structure": ["D_STRUCTURE"]}, {"structure": [STRUCT[ds]]})
    toks = [tok("a", 4, "det"), tok("CONSTANT_NUM", 3, "nummod"), tok("d", 4, "amod"),
            tok("D_STRUCTURE", 0, "root")]
    return S(raw, toks, {"structure": ["D_STRUCTURE"], "ndim": ["CONSTANT_NUM"]},
             {"structure": [STRUCT[ds]], "ndim": [n]})


def _same(ds, what, p, n=None):
    pre = _ndim_prefix(n)
    raw = "A%s %s with the same %s as %s." % (pre, ds, what, ticks(p))
    off = 0 if n is None else 2
    toks = [tok("a", 2 + off, "det")]
    if n is not None:
        toks += [tok("CONSTANT_NUM", 3, "nummod"), tok("d", 4, "amod")]
    toks += [tok("D_STRUCTURE", 0, "root"), tok("with", 6 + off, "case"),
             tok("the", 6 + off, "det"), tok("same", 6 + off, "amod"),
             tok(what, 2 + off, "nmod"), tok("as", 8 + off, "case"),
             tok("PARAM", 6 + off, "nmod")]
    ann = {"structure": ["D_STRUCTURE"]}
    truth = {"structure": [STRUCT[ds]]}
    if what == "type":
        ann["dtype"] = ["&PARAM.dtype"]
        truth["dtype"] = ["&%s.dtype" % p]
    else:
        ann["shape"] = ["&PARAM.shape"]
        truth["shape"] = ["&%s.shape" % p]
    if n is not None:
        ann["ndim"] = ["CONSTANT_NUM"]
        truth["ndim"] = [n]
    return S(raw, toks, ann, truth)


def same_type(ds, p, n=None):
    return _same(ds, "type", p, n)


def same_shape(ds, p, n=None):
    return _same(ds, "shape", p, n)


def must_same(what, p):
    raw = "Must have the same %s as %s." % (what, ticks(p))
    toks = [tok("must", 2, "aux"), tok("have", 0, "root"), tok("the", 5, "det"),
            tok("same", 5, "amod"), tok(what, 2, "obj"), tok("as", 7, "case"),
            tok("PARAM", 5, "nmod")]
    if what == "type":
        return S(raw, toks, {"dtype": ["&PARAM.dtype"]}, {"dtype": ["&%s.dtype" % p]})
    return S(raw, toks, {"shape": ["&PARAM.shape"]}, {"shape": ["&%s.shape" % p]})


def with_shape(ds, shape, prep="with"):
    raw = "A %s %s shape [%s]." % (ds, prep, ", ".join(shape))
    toks = [tok("a", 2, "det"), tok("D_STRUCTURE", 0, "root"), tok(prep, 4, "case"),
            tok("shape", 2, "nmod"), tok("SHAPE", 4, "appos")]
    return S(raw, toks, {"structure": ["D_STRUCTURE"], "shape": ["SHAPE"]},
             {"structure": [STRUCT[ds]], "shape": ["[" + ",".join(shape) + "]"]})


def its_shape(shape):
    raw = "Its shape is [%s]." % ", ".join(shape)
    toks = [tok("its", 2, "nmod:poss"), tok("shape", 4, "nsubj"), tok("is", 4, "cop"),
            tok("SHAPE", 0, "root")]
    return S(raw, toks, {"shape": ["SHAPE"]}, {"shape": ["[" + ",".join(shape) + "]"]})


def enum(dt, values, optional=False):
    q = ", ".join('"%s"' % v for v in values)
    if optional:
        raw = "An optional %s from: %s." % (ticks(dt), q)
        toks = [tok("an", 3, "det"), tok("optional", 3, "amod"), tok("D_TYPE", 0, "root"),
                tok("from", 6, "case"), tok(":", 6, "punct"), tok("ENUM", 3, "nmod")]
    else:
        raw = "A %s from: %s." % (ticks(dt), q)
        toks = [tok("a", 2, "det"), tok("D_TYPE", 0, "root"), tok("from", 5, "case"),
                tok(":", 5, "punct"), tok("ENUM", 2, "nmod")]
    return S(raw, toks, {"dtype": ["D_TYPE"], "enum": ["ENUM"]},
             {"dtype": [DT[dt]], "enum": sorted(values)})


OPS = {">=": ">=", ">": ">", "<": "<", "<=": "<=",
       "greater than": ">", "at least": ">=", "less than": "<"}


def dtype_rexpr(dt, op, v, article="A"):
    raw = "%s %s %s %s." % (article, ticks(dt), op, v)
    toks = [tok(article.lower(), 2, "det"), tok("D_TYPE", 0, "root"), tok("REXPR", 2, "amod")]
    return S(raw, toks, {"dtype": ["D_TYPE"], "range": ["REXPR"]},
             {"dtype": [DT[dt]], "range": ["%s %s" % (OPS[op], v)]})


def must_rexpr(op, v):
    raw = "Must be %s %s." % (op, v)
    toks = [tok("must", 3, "aux"), tok("be", 3, "cop"), tok("REXPR", 0, "root")]
    return S(raw, toks, {"range": ["REXPR"]}, {"range": ["%s %s" % (OPS[op], v)]})


def a_dtype(dt):
    raw = "A %s." % ticks(dt)
    toks = [tok("a", 2, "det"), tok("D_TYPE", 0, "root")]
    return S(raw, toks, {"dtype": ["D_TYPE"]}, {"dtype": [DT[dt]]})


def number_of(noun):
    raw = "The number of %s." % noun
    toks = [tok("the", 2, "det"), tok("number", 0, "root"), tok("of", 4, "case"),
            tok(noun, 2, "nmod")]
    # No abstract annotation; the truth follows the count heuristic.
    return S(raw, toks, {}, {"dtype": ["int"], "ndim": [0], "range": [">= 0"]})


def defaults_num(v):
    raw = "Defaults to %d." % v
    toks = [tok("defaults", 0, "root"), tok("to", 3, "case"), tok("CONSTANT_NUM", 1, "obl")]
    return S(raw, toks)


def defaults_bool(v):
    raw = "Defaults to `%s`." % v
    toks = [tok("defaults", 0, "root"), tok("to", 3, "case"), tok("CONSTANT_BOOL", 1, "obl")]
    return S(raw, toks)


def label_note():
    raw = "Optional label for the operation."
    toks = [tok("optional", 2, "amod"), tok("label", 0, "root"), tok("for", 5, "case"),
            tok("the", 5, "det"), tok("operation", 2, "nmod")]
    return S(raw, toks)


def pad_note():
    raw = "Whether to pad the end with zeros."
    toks = [tok("whether", 3, "mark"), tok("to", 3, "mark"), tok("pad", 0, "root"),
            tok("the", 5, "det"), tok("end", 3, "obj"), tok("with", 7, "case"),
            tok("zeros", 3, "obl")]
    return S(raw, toks)


def window_note(what):
    # "The size of the window for each dimension." / "The stride of the sliding ..."
    if what == "size":
        raw = "The size of the window for each dimension."
        toks = [tok("the", 2, "det"), tok("size", 0, "root"), tok("of", 5, "case"),
                tok("the", 5, "det"), tok("window", 2, "nmod"), tok("for", 8, "case"),
                tok("each", 8, "det"), tok("dimension", 2, "nmod")]
    else:
        raw = "The stride of the sliding window for each dimension."
        toks = [tok("the", 2, "det"), tok("stride", 0, "root"), tok("of", 6, "case"),
                tok("the", 6, "det"), tok("sliding", 6, "amod"), tok("window", 2, "nmod"),
                tok("for", 9, "case"), tok("each", 9, "det"), tok("dimension", 2, "nmod")]
    return S(raw, toks)


def format_note():
    raw = "It needs to be in the default NHWC format."
    toks = [tok("it", 2, "nsubj"), tok("needs", 0, "root"), tok("to", 9, "mark"),
            tok("be", 9, "cop"), tok("in", 9, "case"), tok("the", 9, "det"),
            tok("default", 9, "amod"), tok("nhwc", 9, "compound"), tok("format", 2, "xcomp")]
    return S(raw, toks)


def decay_note():
    raw = "Decay factor for the moving average."
    toks = [tok("decay", 2, "compound"), tok("factor", 0, "root"), tok("for", 6, "case"),
            tok("the", 6, "det"), tok("moving", 6, "amod"), tok("average", 2, "nmod")]
    return S(raw, toks)


def rate_note():
    raw = "The dilation factor in both spatial dimensions."
    toks = [tok("the", 3, "det"), tok("dilation", 3, "compound"), tok("factor", 0, "root"),
            tok("in", 7, "case"), tok("both", 7, "det"), tok("spatial", 7, "amod"),
            tok("dimensions", 3, "nmod")]
    return S(raw, toks)


# ---------------------------------------------------------------------------
# Corpus assembly.


class Api:
    def __init__(self, name, params):
        self.name = name
        self.params = params  # list of (name, optional, default, [S] or None)


def merge_fields(dst, src):
    for k, v in src.items():
        cur = dst.setdefault(k, [])
        for x in v:
            if x not in cur:
                cur.append(x)


def build(apis, with_truth=True, annotate=None):
    corpus, conllu, annotations, truth = [], [], [], {}
    for api in apis:
        entry = {"api": api.name, "params": [], "descriptions": {}}
        tapi = {"params": [], "constraints": {}}
        for pname, optional, default, sents in api.params:
            if optional is not None:
                sig = {"name": pname, "optional": optional, "default": default}
                entry["params"].append(sig)
                tapi["params"].append(sig)
            if sents is None:
                continue
            entry["descriptions"][pname] = " ".join(s.raw for s in sents)
            ann = {"api": api.name, "param": pname}
            tr = {}
            for i, s in enumerate(sents):
                conllu.append(tree_block("%s/%s/%d" % (api.name, pname, i), s.toks))
                merge_fields(ann, s.ann)
                if s.truth and (s.ann or i == 0):
                    merge_fields(tr, s.truth)
            if annotate is None or (api.name, pname) in annotate:
                annotations.append(ann)
            if optional is not None:
                for k in tr:
                    tr[k] = sorted(tr[k], key=str)
                tapi["constraints"][pname] = tr
        corpus.append(entry)
        if with_truth:
            truth[api.name] = tapi
    return corpus, "".join(conllu), annotations, {"apis": truth}


def tree_block(sent_id, toks):
    lines = ["# sent_id = %s" % sent_id]
    for i, (form, head, rel) in enumerate(toks, start=1):
        lemma = LEMMAS.get(form, form.lower())
        upos = "X" if form.isupper() else "_"
        lines.append("\t".join([str(i), form, lemma, upos, "_", "_", str(head), rel, "_", "_"]))
    return "\n".join(lines) + "\n\n"


NONE = "None"


def mini_corpus():
    T = "`Tensor`"
    return [
        Api("tf.nn.atrous_conv2d", [
            ("value", False, None, [of_type(T, ["float"], 4), format_note()]),
            ("filters", False, None, [same_type(T, "value", 4),
                                      its_shape(["filter_height", "filter_width",
                                                 "in_channels", "out_channels"])]),
            ("rate", False, None, [dtype_rexpr("int32", ">", "0"), rate_note()]),
            ("padding", False, None, [enum("string", ["SAME", "VALID"])]),
            ("name", True, NONE, [label_note()]),
        ]),
        Api("tf.nn.conv2d", [
            ("input", False, None, [of_type(T, ["half", "bfloat16", "float32", "float64"]),
                                    plain(T, 4)]),
            ("filters", False, None, [same_type(T, "input", 4)]),
            ("strides", False, None, [list_of("list", "ints"), window_note("stride")]),
            ("padding", False, None, [enum("string", ["SAME", "VALID"])]),
            ("data_format", True, "'NHWC'", [enum("string", ["NHWC", "NCHW"], optional=True)]),
        ]),
        Api("tf.math.segment_sum", [
            ("data", False, None, [of_type(T, ["float32", "float64", "int32", "int64"])]),
            ("segment_ids", False, None, [of_type(T, ["int32", "int64"], 1),
                                          must_rexpr(">=", "0")]),
            ("num_segments", False, None, [number_of("segments"), defaults_num(0)]),
        ]),
        Api("tf.one_hot", [
            ("indices", False, None, [of_type(T, ["int32", "int64", "uint8"])]),
            ("depth", False, None, [dtype_rexpr("int32", ">=", "1", article="An")]),
            ("on_value", True, NONE, [plain("array", 0), defaults_num(1)]),
            ("axis", True, NONE, [a_dtype("int"), defaults_num(-1)]),
        ]),
        Api("tf.nn.avg_pool", [
            ("value", False, None, [plain(T, 4), must_type(["float16", "float32", "float64"])]),
            ("ksize", False, None, [list_of("list", "ints"), window_note("size")]),
            ("strides", False, None, [list_of("tuple", "ints"), window_note("stride")]),
        ]),
        Api("tf.image.resize", [
            ("images", False, None, [with_shape(T, ["batch", "height", "width", "channels"])]),
            ("size", False, None, [plain(T, 1), one_of_types(["int32"]),
                                   must_rexpr(">", "0")]),
            ("antialias", True, "False", [a_dtype("bool"), defaults_bool("False")]),
        ]),
        Api("tf.math.add", [
            ("x", False, None, [of_type(T, ["bfloat16", "half", "float32", "float64",
                                            "int32", "int64", "complex64"])]),
            ("y", False, None, [same_type(T, "x")]),
        ]),
        Api("tf.where", [
            ("condition", False, None, [of_type(T, ["bool"])]),
            ("x", True, NONE, None),
            ("y", True, NONE, [plain(T), must_same("shape", "x")]),
        ]),
        Api("tf.math.multiply", [
            ("x", False, None, [plain(T), one_of_types(["float16", "float32", "float64",
                                                        "int32", "complex64"])]),
            ("y", False, None, [same_type(T, "x"), must_rexpr(">=", "0")]),
        ]),
        Api("tf.nn.dropout", [
            ("x", False, None, [of_type(T, ["float"])]),
            ("rate", False, None, [dtype_rexpr("float", "<", "1")]),
            ("noise_shape", True, NONE, [of_type(T, ["int32"], 1), must_same("shape", "x")]),
        ]),
        Api("tf.signal.stft", [
            ("signals", False, None, [of_type_with_shape(T, ["float32", "float64"],
                                                         ["batch", "samples"])]),
            ("frame_length", False, None, [dtype_rexpr("int", ">", "0", article="An")]),
            ("pad_end", True, "False", [a_dtype("bool"), pad_note()]),
        ]),
        Api("tf.nn.embedding_lookup", [
            ("params", False, None, [of_type(T, ["float32"], 2)]),
            ("ids", False, None, [of_type(T, ["int32", "int64"]), must_rexpr(">=", "0")]),
            ("max_norm", True, NONE, [dtype_rexpr("float", "greater than", "0")]),
        ]),
        Api("tf.math.unsorted_segment_max", [
            ("data", False, None, [same_shape(T, "segment_ids", 1)]),
            ("segment_ids", False, None, [of_type(T, ["int32", "int64"], 1),
                                          must_rexpr(">=", "0")]),
        ]),
    ]


def mock_corpus():
    T = "`Tensor`"
    return [
        Api("mock.identity", [("x", False, None, [plain(T)])]),
        Api("mock.io.decode_raw", [
            ("input_bytes", False, None, [of_type(T, ["string"])]),
            ("byte_order", False, None, [enum("string", ["big", "little"])]),
            ("name", True, NONE, [label_note()]),
        ]),
        Api("mock.math.segment_reduce", [
            ("data", False, None, [of_type(T, ["float32", "float64"])]),
            ("segment_ids", False, None, [of_type(T, ["int32", "int64"], 1),
                                          must_rexpr(">=", "0")]),
            ("num_segments", False, None, [of_type(T, ["int32"], 0), must_rexpr(">=", "0")]),
            ("reduction", True, "'sum'", [enum("string", ["mean", "sum"], optional=True)]),
            ("name", True, NONE, [label_note()]),
        ]),
        Api("mock.nn.embedding_lookup", [
            ("params", False, None, [of_type(T, ["float32"], 2)]),
            ("ids", False, None, [of_type(T, ["int32", "int64"]), must_rexpr(">=", "0")]),
            ("max_norm", True, NONE, [dtype_rexpr("float", "greater than", "0")]),
            ("name", True, NONE, [label_note()]),
        ]),
        Api("mock.nn.max_pool3d", [
            ("input", False, None, [of_type(T, ["float16", "float32", "float64"], 5)]),
            ("ksize", False, None, [list_of("list", "ints"), window_note("size")]),
            ("strides", False, None, [list_of("list", "ints"), window_note("stride")]),
            ("padding", False, None, [enum("string", ["SAME", "VALID"])]),
            ("data_format", True, "'NDHWC'", [enum("string", ["NDHWC", "NCDHW"],
                                                   optional=True)]),
            ("name", True, NONE, [label_note()]),
        ]),
        Api("mock.signal.frame", [
            ("signal", False, None, [of_type_with_shape(T, ["float32"],
                                                        ["batch_size", "signal_length"])]),
            ("frame_length", False, None, [of_type(T, ["int32"], 0), must_rexpr(">", "0")]),
            ("frame_step", False, None, [of_type(T, ["int32"], 0), must_rexpr(">=", "0")]),
            ("pad_end", True, "False", [a_dtype("bool"), pad_note()]),
            ("name", True, NONE, [label_note()]),
        ]),
        Api("mock.sparse.unravel_index", [
            ("indices", False, None, [of_type(T, ["int32", "int64"])]),
            ("dims", False, None, [same_type(T, "indices", 1), must_rexpr(">=", "0")]),
            ("name", True, NONE, [label_note()]),
        ]),
    ]


def two_sentence_corpus():
    s1 = of_type("`Tensor`", ["half", "bfloat16", "float32", "float64"])
    s1.raw = "A `Tensor` of type `half`, `bfloat16`, `float32`, `float64`."
    return [
        Api("tf.nn.conv2d", [("input", False, None, [s1])]),
        Api("tf.nn.max_pool", [("value", False, None, [must_type(["float16", "float32",
                                                                  "float64"])])]),
    ]


def moving_average_corpus():
    T = "`Tensor`"
    return [
        Api("tf.keras.backend.moving_average_update", [
            ("x", False, None, [plain(T)]),
            ("value", False, None, [same_shape(T, "variable")]),
            ("momentum", False, None, [decay_note()]),
        ]),
    ]


KEYWORDS = {
    "dtypes": [
        *({"surface": n, "canonical": n} for n in [
            "bool", "int8", "int16", "int32", "int64", "uint8", "uint16", "uint32", "uint64",
            "float16", "bfloat16", "float32", "float64", "complex64", "complex128", "string"]),
        {"surface": "half", "canonical": "float16"},
        {"surface": "double", "canonical": "float64"},
        {"surface": "boolean", "canonical": "bool"},
        {"surface": "str", "canonical": "string"},
        {"surface": "int", "canonical": "int"},
        {"surface": "ints", "canonical": "int"},
        {"surface": "integer", "canonical": "int"},
        {"surface": "integers", "canonical": "int"},
        {"surface": "float", "canonical": "float"},
        {"surface": "floats", "canonical": "float"},
        {"surface": "complex", "canonical": "complex"},
    ],
    "structures": [
        {"surface": "tensor", "canonical": "tensor"},
        {"surface": "tensors", "canonical": "tensor"},
        {"surface": "array", "canonical": "tensor"},
        {"surface": "arrays", "canonical": "tensor"},
        {"surface": "ndarray", "canonical": "tensor"},
        {"surface": "list", "canonical": "list"},
        {"surface": "lists", "canonical": "list"},
        {"surface": "tuple", "canonical": "tuple"},
        {"surface": "tuples", "canonical": "tuple"},
    ],
}

# Paths are relative to the config file.
PIPELINE = {
    "keywords": "../keywords.json",
    "sample": {"corpus": "../sample/corpus.json", "trees": "../sample/trees.conllu",
               "annotations": "../sample/annotations.json", "truth": "../sample/truth.json"},
    "target_corpus": {"corpus": "../mock/corpus.json", "trees": "../mock/trees.conllu",
                      "truth": "../mock/truth.json"},
    "rules": {"min_support": 2, "min_confidence": 0.9, "max_size": 7},
    "select": {"supports": [2, 3, 4, 5], "confidences": [0.6, 0.7, 0.8, 0.9], "folds": 5},
    "extract": {"number_of_heuristic": True},
    "fuzz": {"max_iter": 2000, "conform_ratio": 0.5, "optional_ratio": 0.2,
             "mutation_p": 0.4, "dims_range": [0, 5]},
    "target": {"target": "mocklib", "command": ["paramspec_worker"],
               "abort_is_exception": False, "timeout_ms": 10000},
    "harness": "process",
    "seed": 1,
}


def dump(path, obj):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as f:
        if isinstance(obj, str):
            f.write(obj)
        else:
            json.dump(obj, f, indent=2, sort_keys=True)
            f.write("\n")


def main():
    root = sys.argv[1] if len(sys.argv) > 1 else os.path.join(
        os.path.dirname(os.path.abspath(__file__)), "..", "..", "data")
    dump(os.path.join(root, "keywords.json"), KEYWORDS)
    dump(os.path.join(root, "config", "pipeline.json"), PIPELINE)

    corpus, trees, ann, truth = build(mini_corpus())
    assert len(ann) == 40, len(ann)
    dump(os.path.join(root, "sample", "corpus.json"), corpus)
    dump(os.path.join(root, "sample", "trees.conllu"), trees)
    dump(os.path.join(root, "sample", "annotations.json"), ann)
    dump(os.path.join(root, "sample", "truth.json"), truth)

    corpus, trees, ann, truth = build(mock_corpus())
    dump(os.path.join(root, "mock", "corpus.json"), corpus)
    dump(os.path.join(root, "mock", "trees.conllu"), trees)
    dump(os.path.join(root, "mock", "truth.json"), truth)

    corpus, trees, ann, _ = build(two_sentence_corpus(), with_truth=False)
    dump(os.path.join(root, "fixtures", "two_sentence", "corpus.json"), corpus)
    dump(os.path.join(root, "fixtures", "two_sentence", "trees.conllu"), trees)
    dump(os.path.join(root, "fixtures", "two_sentence", "annotations.json"), ann)

    corpus, trees, _, _ = build(moving_average_corpus(), with_truth=False)
    dump(os.path.join(root, "fixtures", "moving_average", "corpus.json"), corpus)
    dump(os.path.join(root, "fixtures", "moving_average", "trees.conllu"), trees)


if __name__ == "__main__":
    main()
