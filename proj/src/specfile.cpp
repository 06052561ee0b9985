#include "hcover/specfile.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace hcover::specfile {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

struct Entry {
  std::string value;
  int line;
};

std::uint32_t parse_uint(const Entry& v, const std::string& key) {
  std::uint32_t out = 0;
  const char* end = v.value.data() + v.value.size();
  const auto [ptr, ec] = std::from_chars(v.value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    throw SpecError("line " + std::to_string(v.line) + ": " + key + " must be a non-negative integer");
  }
  return out;
}

std::vector<std::uint32_t> parse_vector(const Entry& v, const std::string& key) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(v.value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_uint({trim(item), v.line}, key));
  if (out.empty()) throw SpecError("line " + std::to_string(v.line) + ": " + key + " is empty");
  return out;
}

gf::Code parse_element(const gf::Field& f, const Entry& v, const std::string& key) {
  try {
    return f.from_coords(parse_vector(v, key));
  } catch (const PreconditionError& e) {
    throw SpecError("line " + std::to_string(v.line) + ": " + key + ": " + e.what());
  }
}

std::string join(const std::vector<std::uint32_t>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

}  // namespace

curve::CurveFamilyParams parse(std::istream& is, std::uint64_t max_field_order) {
  std::map<std::string, Entry> entries;
  std::string raw;
  int line = 0;
  while (std::getline(is, raw)) {
    ++line;
    const std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw SpecError("line " + std::to_string(line) + ": expected key = value");
    const std::string key = trim(s.substr(0, eq));
    const std::string value = trim(s.substr(eq + 1));
    if (!entries.emplace(key, Entry{value, line}).second) {
      throw SpecError("line " + std::to_string(line) + ": duplicate key " + key);
    }
  }
  auto take = [&](const std::string& key) {
    const auto it = entries.find(key);
    if (it == entries.end()) throw SpecError("missing key " + key);
    Entry e = it->second;
    entries.erase(it);
    return e;
  };

  const std::uint32_t p = parse_uint(take("p"), "p");
  const std::uint32_t e = parse_uint(take("e"), "e");
  const std::uint32_t n = parse_uint(take("n"), "n");
  curve::CurveFamilyParams out;
  try {
    out.tower = gf::make_tower(p, e, n, max_field_order);
  } catch (const CapExceeded&) {
    throw;
  } catch (const Error& err) {
    throw SpecError(std::string("invalid field parameters: ") + err.what());
  }
  const gf::Field& f = *out.tower->top;
  if (entries.count("modulus")) {
    const Entry m = take("modulus");
    if (parse_vector(m, "modulus") != f.modulus()) {
      throw FieldMismatch("line " + std::to_string(m.line) + ": modulus differs from " + join(f.modulus()));
    }
  }
  for (std::uint32_t i = 0; i < n; ++i) {
    const std::string key = "alpha." + std::to_string(i);
    out.alpha.push_back(parse_element(f, take(key), key));
  }
  out.c = parse_element(f, take("c"), "c");
  if (!entries.empty()) {
    const auto& [key, entry] = *entries.begin();
    throw SpecError("line " + std::to_string(entry.line) + ": unknown key " + key);
  }
  try {
    out.validate();
  } catch (const PreconditionError& err) {
    throw SpecError(err.what());
  }
  return out;
}

curve::CurveFamilyParams load(const std::string& path, std::uint64_t max_field_order) {
  std::ifstream in(path);
  if (!in) throw SpecError("cannot open " + path);
  return parse(in, max_field_order);
}

std::string write(const curve::CurveFamilyParams& params) {
  const gf::Field& f = *params.field();
  std::ostringstream os;
  os << "p = " << params.p() << "\ne = " << params.e() << "\nn = " << params.n() << '\n';
  for (std::size_t i = 0; i < params.alpha.size(); ++i) os << "alpha." << i << " = " << join(f.coords(params.alpha[i])) << '\n';
  os << "c = " << join(f.coords(params.c)) << '\n';
  os << "modulus = " << join(f.modulus()) << '\n';
  return os.str();
}

}  // namespace hcover::specfile
