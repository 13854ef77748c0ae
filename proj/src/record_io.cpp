#include "cyclolab/record_io.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

namespace cyclo {

namespace {

using json = nlohmann::ordered_json;

mpfr_prec_t text_precision(int digits) {
  return std::max<mpfr_prec_t>(64, static_cast<mpfr_prec_t>(std::ceil(digits * 3.33)) + 64);
}

std::string bound_text(const BigFloatValue& v) {
  Rational hi = v.hi_rational();
  return hi <= 0 ? std::string("0") : format_significant(hi, 3);
}

// Decimal text back to a ball whose radius is one unit in the last printed place.
BigFloatValue ball_from_text(const std::string& s, int digits) {
  Rational q = parse_rational(s);
  auto dot = s.find('.');
  Rational err = dot == std::string::npos
                     ? Rational(Integer(1), pow(Integer(10), static_cast<unsigned long>(digits)))
                     : Rational(Integer(1), pow(Integer(10), static_cast<unsigned long>(s.size() - dot - 1)));
  mpfr_prec_t prec = text_precision(digits);
  return BigFloatValue::from_interval(Interval::hull(q - err, q + err, prec));
}

BigFloatValue upper_bound_ball(const std::string& s, int digits) {
  Rational q = parse_rational(s);
  return BigFloatValue::from_interval(Interval::hull(0, q, text_precision(digits)));
}

}  // namespace

std::string to_json_line(const CoincidenceRecord& rec) {
  json j;
  j["m"] = rec.m;
  j["n"] = rec.n;
  j["degree"] = rec.degree;
  json roots = json::array();
  for (const auto& r : rec.roots) {
    json o;
    o["kind"] = r.kind == RootKind::Real ? "real" : "complex";
    if (r.kind == RootKind::Real) {
      o["value"] = r.value_text();
    } else {
      o["value"] = json::array({ball_text(r.re, r.digits), ball_text(r.im, r.digits)});
    }
    o["modulus"] = ball_text(r.modulus, r.digits);
    o["residual"] = bound_text(r.residual);
    o["multiplicity"] = r.multiplicity;
    o["digits"] = r.digits;
    if (r.interval) o["interval"] = json::array({to_string(r.interval->lo), to_string(r.interval->hi)});
    if (r.kind == RootKind::Complex) o["modulus_sqrt2"] = r.modulus_sqrt2;
    roots.push_back(std::move(o));
  }
  j["roots"] = std::move(roots);
  if (rec.max_abs_real) j["max_abs_real"] = ball_text(*rec.max_abs_real, 15);
  if (rec.min_abs_real) j["min_abs_real"] = ball_text(*rec.min_abs_real, 15);
  j["outer"] = json::array({rec.outer.counts[0], rec.outer.counts[1], rec.outer.counts[2], rec.outer.counts[3]});
  j["exception"] = rec.sanctioned_exception;
  j["violation"] = rec.violation;
  return j.dump();
}

CoincidenceRecord record_from_json(const std::string& line) {
  json j;
  try {
    j = json::parse(line);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("record_from_json: ") + e.what());
  }
  try {
    CoincidenceRecord rec;
    rec.m = j.at("m").get<u64>();
    rec.n = j.at("n").get<u64>();
    rec.degree = j.value("degree", -1L);
    for (const auto& o : j.at("roots")) {
      RootRecord r;
      r.m = rec.m;
      r.n = rec.n;
      r.digits = o.value("digits", 15);
      r.multiplicity = o.value("multiplicity", 1u);
      const mpfr_prec_t prec = text_precision(r.digits);
      if (o.at("kind").get<std::string>() == "real") {
        r.kind = RootKind::Real;
        if (o.contains("interval")) {
          IsolatingInterval iv;
          iv.lo = parse_rational(o["interval"][0].get<std::string>());
          iv.hi = parse_rational(o["interval"][1].get<std::string>());
          iv.multiplicity = r.multiplicity;
          r.interval = iv;
          r.re = BigFloatValue::from_interval(Interval::hull(iv.lo, iv.hi, prec));
        } else {
          r.re = ball_from_text(o.at("value").get<std::string>(), r.digits);
        }
        r.im = BigFloatValue::exact(0, prec);
        r.modulus = BigFloatValue::from_interval(abs(r.re.enclosure()));
      } else {
        r.kind = RootKind::Complex;
        r.re = ball_from_text(o.at("value")[0].get<std::string>(), r.digits);
        r.im = ball_from_text(o.at("value")[1].get<std::string>(), r.digits);
        r.modulus = ball_from_text(o.at("modulus").get<std::string>(), r.digits);
        r.modulus_sqrt2 = o.value("modulus_sqrt2", false);
      }
      r.residual = upper_bound_ball(o.at("residual").get<std::string>(), r.digits);
      rec.roots.push_back(std::move(r));
    }
    if (j.contains("max_abs_real")) rec.max_abs_real = ball_from_text(j["max_abs_real"].get<std::string>(), 15);
    if (j.contains("min_abs_real")) rec.min_abs_real = ball_from_text(j["min_abs_real"].get<std::string>(), 15);
    if (j.contains("outer"))
      for (std::size_t i = 0; i < 4; ++i) rec.outer.counts[i] = j["outer"][i].get<int>();
    rec.sanctioned_exception = j.value("exception", false);
    rec.violation = j.value("violation", false);
    return rec;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("record_from_json: ") + e.what());
  }
}

}  // namespace cyclo
