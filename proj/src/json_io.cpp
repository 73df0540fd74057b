#include "prg/json_io.hpp"

namespace prg {

namespace {

Json integer_to_json(const Integer& z) {
    if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
    return Json(z.get_str());
}

Integer integer_from_json(const Json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw Error("json: expected an integer or a decimal string");
}

}  // namespace

Json rational_to_json(const Rational& q) {
    return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) throw Error("json: rational must be [num, den]");
    return make_rational(integer_from_json(j[0]), integer_from_json(j[1]));
}

Json cyclo_to_json(const CycloElement& x) {
    Json coeffs = Json::array();
    for (const Rational& c : x.coeffs()) coeffs.push_back(rational_to_json(c));
    return Json{{"order", x.order()}, {"coeffs", std::move(coeffs)}};
}

CycloElement cyclo_from_json(const Json& j) {
    unsigned order = j.at("order").get<unsigned>();
    std::vector<Rational> coeffs;
    for (const Json& c : j.at("coeffs")) coeffs.push_back(rational_from_json(c));
    return CycloElement(order, std::move(coeffs));
}

Json mat2_to_json(const Mat2& m) {
    return Json{{"order", m.order()},
                {"entries", Json::array({Json::array({cyclo_to_json(m.at(1, 1)),
                                                      cyclo_to_json(m.at(1, 2))}),
                                         Json::array({cyclo_to_json(m.at(2, 1)),
                                                      cyclo_to_json(m.at(2, 2))})})}};
}

Mat2 mat2_from_json(const Json& j) {
    const Json& e = j.at("entries");
    return Mat2(cyclo_from_json(e[0][0]), cyclo_from_json(e[0][1]),
                cyclo_from_json(e[1][0]), cyclo_from_json(e[1][1]));
}

Json spec_to_json(const GroupSpec& s) {
    return Json{{"k", s.k},
                {"a", axis_value(s.a)},
                {"b", axis_value(s.b)},
                {"c", axis_value(s.c)},
                {"literal", spec_to_string(s)}};
}

GroupSpec spec_from_json(const Json& j) {
    return GroupSpec{j.at("k").get<unsigned>(), axis(j.at("a").get<int>()),
                     axis(j.at("b").get<int>()), axis(j.at("c").get<int>())};
}

Json group_to_json(const FiniteGroup& g) {
    Json elements = Json::array();
    for (const Mat2& m : g.elements()) elements.push_back(mat2_to_json(m));
    Json words = Json::array();
    for (const std::string& w : g.words()) words.push_back(w);
    return Json{{"spec", spec_to_json(g.spec())},
                {"ambient", g.ambient()},
                {"count", g.size()},
                {"elements", std::move(elements)},
                {"words", std::move(words)}};
}

FiniteGroup group_from_json(const Json& j) {
    GroupSpec spec = spec_from_json(j.at("spec"));
    unsigned ambient = j.at("ambient").get<unsigned>();
    std::vector<Mat2> elements;
    for (const Json& m : j.at("elements")) elements.push_back(mat2_from_json(m));
    std::vector<std::string> words;
    for (const Json& w : j.at("words")) words.push_back(w.get<std::string>());
    if (j.contains("count") && j.at("count").get<std::size_t>() != elements.size())
        throw Error("json: group count does not match its element list");
    return FiniteGroup(spec, ambient, std::move(elements), std::move(words));
}

Json certificate_to_json(const InfinitenessCertificate& c) {
    Json coords = Json::array();
    for (const Rational& q : c.coordinates) coords.push_back(rational_to_json(q));
    return Json{{"spec", spec_to_json(c.spec)},
                {"trace_squared", cyclo_to_json(c.trace_squared)},
                {"coordinates", std::move(coords)},
                {"witness_index", c.witness_index}};
}

InfinitenessCertificate certificate_from_json(const Json& j) {
    InfinitenessCertificate c{spec_from_json(j.at("spec")),
                              cyclo_from_json(j.at("trace_squared")),
                              {},
                              j.at("witness_index").get<std::size_t>()};
    for (const Json& q : j.at("coordinates")) c.coordinates.push_back(rational_from_json(q));
    return c;
}

Json witness_to_json(const Witness& w) {
    Json entries = Json::array();
    for (const WitnessEntry& e : w.entries) {
        entries.push_back(Json{{"target", e.target_name},
                               {"word", word_to_string(e.word)},
                               {"matrix", mat2_to_json(e.target)}});
    }
    return Json{{"over", spec_to_json(w.over)},
                {"expressed", spec_to_json(w.expressed)},
                {"ambient", w.ambient},
                {"entries", std::move(entries)}};
}

Witness witness_from_json(const Json& j) {
    Witness w{spec_from_json(j.at("over")), spec_from_json(j.at("expressed")),
              j.at("ambient").get<unsigned>(), {}};
    for (const Json& e : j.at("entries")) {
        w.entries.push_back(WitnessEntry{e.at("target").get<std::string>(),
                                         mat2_from_json(e.at("matrix")),
                                         word_from_string(e.at("word").get<std::string>())});
    }
    return w;
}

Json evidence_to_json(const NegativeEvidence& e) {
    if (const auto* gap = std::get_if<OrderGap>(&e)) {
        return Json{{"type", "order-gap"},
                    {"order_p", gap->order_p ? Json(*gap->order_p) : Json(nullptr)},
                    {"order_q", gap->order_q ? Json(*gap->order_q) : Json(nullptr)},
                    {"note", gap->note}};
    }
    if (const auto* fo = std::get_if<FieldObstruction>(&e)) {
        return Json{{"type", "field-obstruction"},
                    {"rotation", fo->rotation},
                    {"p_rotated", spec_to_json(fo->p_rotated)},
                    {"q_rotated", spec_to_json(fo->q_rotated)},
                    {"subfield_k", fo->subfield_k},
                    {"p_root", mat2_to_json(fo->p_root)},
                    {"p_translation", mat2_to_json(fo->p_translation)},
                    {"q_translation", mat2_to_json(fo->q_translation)},
                    {"offending_row", fo->offending_row},
                    {"offending_col", fo->offending_col},
                    {"offending_entry", cyclo_to_json(fo->offending_entry)}};
    }
    if (const auto* me = std::get_if<MissingElement>(&e)) {
        return Json{{"type", "missing-element"},
                    {"element", mat2_to_json(me->element)},
                    {"absent_from", me->absent_from},
                    {"description", me->description}};
    }
    const auto& d = std::get<DegreeObstruction>(e);
    return Json{{"type", "degree-obstruction"}, {"k", d.k}, {"l", d.l}};
}

NegativeEvidence evidence_from_json(const Json& j) {
    const std::string type = j.at("type").get<std::string>();
    if (type == "order-gap") {
        OrderGap gap;
        if (!j.at("order_p").is_null()) gap.order_p = j.at("order_p").get<std::uint64_t>();
        if (!j.at("order_q").is_null()) gap.order_q = j.at("order_q").get<std::uint64_t>();
        gap.note = j.at("note").get<std::string>();
        return gap;
    }
    if (type == "field-obstruction") {
        return FieldObstruction{j.at("rotation").get<int>(),
                                spec_from_json(j.at("p_rotated")),
                                spec_from_json(j.at("q_rotated")),
                                j.at("subfield_k").get<unsigned>(),
                                mat2_from_json(j.at("p_root")),
                                mat2_from_json(j.at("p_translation")),
                                mat2_from_json(j.at("q_translation")),
                                j.at("offending_row").get<int>(),
                                j.at("offending_col").get<int>(),
                                cyclo_from_json(j.at("offending_entry"))};
    }
    if (type == "missing-element") {
        return MissingElement{mat2_from_json(j.at("element")),
                              j.at("absent_from").get<std::string>(),
                              j.at("description").get<std::string>()};
    }
    if (type == "degree-obstruction") {
        return DegreeObstruction{j.at("k").get<unsigned>(), j.at("l").get<unsigned>()};
    }
    throw Error("json: unknown evidence type " + type);
}

Json verdict_to_json(const RelationVerdict& v) {
    Json out{{"answer", answer_to_string(v.answer)}, {"rule", v.rule}};
    if (v.witness) out["witness"] = witness_to_json(*v.witness);
    if (v.evidence) out["evidence"] = evidence_to_json(*v.evidence);
    return out;
}

RelationVerdict verdict_from_json(const Json& j) {
    RelationVerdict v;
    const std::string a = j.at("answer").get<std::string>();
    if (a == "equal") v.answer = RelAnswer::Equal;
    else if (a == "not-equal") v.answer = RelAnswer::NotEqual;
    else if (a == "subgroup") v.answer = RelAnswer::Subgroup;
    else if (a == "not-subgroup") v.answer = RelAnswer::NotSubgroup;
    else if (a == "undetermined") v.answer = RelAnswer::Undetermined;
    else throw Error("json: unknown answer " + a);
    v.rule = j.at("rule").get<std::string>();
    if (j.contains("witness")) v.witness = witness_from_json(j.at("witness"));
    if (j.contains("evidence")) v.evidence = evidence_from_json(j.at("evidence"));
    return v;
}

Json perm_to_json(const SigmaPerm& p) {
    Json images = Json::object();
    for (std::size_t i = 0; i < 6; ++i)
        images[sigma_name(sigma_from_index(i))] = sigma_name(sigma_from_index(p.image[i]));
    return Json{{"images", std::move(images)}};
}

Json gu29_report_to_json(const Gu29Report& r) {
    return Json{{"homomorphism", r.homomorphism},
                {"injective", r.injective},
                {"all_in_gu", r.all_in_gu},
                {"image_size", r.image_size}};
}

}  // namespace prg
