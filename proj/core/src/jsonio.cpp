#include "lucaszeta/jsonio.hpp"

namespace lucaszeta {

Json complex_to_json(const Complex& z, long prec) {
    return Json{{"re", z.re.str()}, {"im", z.im.str()}, {"prec_bits", prec}};
}

Complex complex_from_json(const Json& j) {
    long prec = j.at("prec_bits").get<long>();
    return Complex{Real::parse(j.at("re").get<std::string>(), prec),
                   Real::parse(j.at("im").get<std::string>(), prec)};
}

Json eval_result_to_json(const EvalResult& r, long prec) {
    return Json{{"value", complex_to_json(r.value, prec)},
                {"tail_bound", bound_str(r.truncation_tail_bound)},
                {"rounding_bound", bound_str(r.rounding_bound)},
                {"terms_used", r.terms_used}};
}

Json quad_to_json(const QuadExt& x) {
    return Json{{"rational_part", rational_str(x.rational_part())},
                {"surd_part", rational_str(x.surd_part())},
                {"radicand", x.radicand().get_str()}};
}

std::string bound_str(const Real& r) { return r.str(6); }

} // namespace lucaszeta
