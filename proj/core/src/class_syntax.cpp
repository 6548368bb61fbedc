#include "gwq/class_syntax.hpp"

#include <cctype>
#include <charconv>

#include "gwq/errors.hpp"

namespace gwq {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool parse_int(std::string_view s, int& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

int require_int(std::string_view s, std::string_view context) {
  int v = 0;
  if (!parse_int(trim(s), v)) {
    throw ParameterError("expected an integer in '" + std::string(context) + "'");
  }
  return v;
}

[[noreturn]] void bad_class(const RingModel& model, std::string_view text) {
  throw ParameterError("cannot read '" + std::string(text) + "' as a class on " + model.id());
}

// "Hx" or "Hx^a" with x the given suffix; returns the exponent.
bool read_power(std::string_view factor, std::string_view name, int& exponent) {
  if (factor.substr(0, name.size()) != name) return false;
  auto rest = factor.substr(name.size());
  if (rest.empty()) {
    exponent = 1;
    return true;
  }
  if (rest.front() != '^') return false;
  return parse_int(rest.substr(1), exponent);
}

std::vector<int> ints_of(std::string_view inner, std::string_view context) {
  std::vector<int> out;
  inner = trim(inner);
  if (inner.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = inner.find(',', start);
    out.push_back(require_int(inner.substr(start, comma - start), context));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string power(std::string_view name, int e) {
  return e == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(e);
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view text) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      out.emplace_back(trim(text.substr(start, i - start)));
      start = i + 1;
    } else if (text[i] == '[' || text[i] == '(') {
      ++depth;
    } else if (text[i] == ']' || text[i] == ')') {
      --depth;
    }
  }
  return out;
}

RingModel parse_model(std::string_view text) {
  text = trim(text);
  auto fail = [&]() -> RingModel {
    throw ParameterError("unknown model '" + std::string(text) +
                         "' (expected P<N>, P<m>xP<n> or Gr(k,m))");
  };
  if (text.starts_with("Gr(") && text.ends_with(")")) {
    auto nums = ints_of(text.substr(3, text.size() - 4), text);
    if (nums.size() != 2) return fail();
    return RingModel::grassmannian(nums[0], nums[1]);
  }
  if (text.starts_with("Gr:")) {
    auto nums = ints_of(text.substr(3), text);
    if (nums.size() != 2) return fail();
    return RingModel::grassmannian(nums[0], nums[1]);
  }
  if (text.starts_with("P")) {
    auto x = text.find('x');
    int a = 0;
    if (x == std::string_view::npos) {
      if (!parse_int(text.substr(1), a)) return fail();
      return RingModel::projective(a);
    }
    int b = 0;
    auto right = text.substr(x + 1);
    if (!parse_int(text.substr(1, x - 1), a) || !right.starts_with("P") ||
        !parse_int(right.substr(1), b)) {
      return fail();
    }
    return RingModel::product(a, b);
  }
  return fail();
}

CurveClass parse_curve_class(const RingModel& model, std::string_view text) {
  auto nums = ints_of(text, text);
  CurveClass A(std::vector<long>(nums.begin(), nums.end()));
  model.check_curve_class(A);
  return A;
}

BasisClass parse_class(const RingModel& model, std::string_view text) {
  text = trim(text);
  if (text == "1") return model.fundamental();
  if (text == "pt") return model.point();
  BasisClass b;
  switch (model.kind()) {
    case ModelKind::Projective: {
      int e = 0;
      if (!read_power(text, "H", e)) bad_class(model, text);
      b.tag = {e};
      break;
    }
    case ModelKind::Product: {
      b.tag = {0, 0};
      std::size_t start = 0;
      while (start <= text.size()) {
        auto star = text.find('*', start);
        auto factor = text.substr(start, star - start);
        int e = 0;
        if (read_power(factor, "H1", e)) {
          b.tag[0] += e;
        } else if (read_power(factor, "H2", e)) {
          b.tag[1] += e;
        } else {
          bad_class(model, text);
        }
        if (star == std::string_view::npos) break;
        start = star + 1;
      }
      break;
    }
    case ModelKind::Grassmannian: {
      if (!text.starts_with("s[") || !text.ends_with("]")) bad_class(model, text);
      try {
        b.tag = Partition(ints_of(text.substr(2, text.size() - 3), text)).parts();
      } catch (const ParameterError&) {
        bad_class(model, text);
      }
      break;
    }
  }
  if (!model.find(b)) bad_class(model, text);
  return b;
}

std::string format_class(const RingModel& model, const BasisClass& b) {
  const auto idx = model.index_of(b);
  if (idx == model.fundamental_index()) return "1";
  if (idx == model.point_index()) return "pt";
  switch (model.kind()) {
    case ModelKind::Projective:
      return power("H", b.tag[0]);
    case ModelKind::Product: {
      std::string s;
      if (b.tag[0] > 0) s = power("H1", b.tag[0]);
      if (b.tag[1] > 0) s += (s.empty() ? "" : "*") + power("H2", b.tag[1]);
      return s;
    }
    case ModelKind::Grassmannian: {
      std::string s = "s[";
      for (std::size_t i = 0; i < b.tag.size(); ++i) s += (i ? "," : "") + std::to_string(b.tag[i]);
      return s + "]";
    }
  }
  return {};
}

std::vector<BasisClass> parse_class_list(const RingModel& model, std::string_view text) {
  std::vector<BasisClass> out;
  for (const auto& item : split_top_level(text)) {
    std::string_view body = item;
    int count = 1;
    if (auto star = body.rfind('*'); star != std::string_view::npos) {
      int k = 0;
      if (parse_int(body.substr(star + 1), k)) {
        if (k < 1) throw ParameterError("multiplicity must be positive in '" + item + "'");
        count = k;
        body = body.substr(0, star);
      }
    }
    const auto b = parse_class(model, body);
    out.insert(out.end(), static_cast<std::size_t>(count), b);
  }
  return out;
}

std::string format_class_list(const RingModel& model, const std::vector<BasisClass>& classes) {
  std::string s;
  for (std::size_t i = 0; i < classes.size();) {
    std::size_t j = i;
    while (j < classes.size() && classes[j] == classes[i]) ++j;
    if (!s.empty()) s += ',';
    s += format_class(model, classes[i]);
    if (j - i > 1) s += "*" + std::to_string(j - i);
    i = j;
  }
  return s;
}

}  // namespace gwq
