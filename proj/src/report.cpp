#include "elw/report.hpp"

#include <algorithm>
#include <sstream>

namespace elw::cli {

namespace {

// Display width in code points; witnesses contain a few multibyte symbols.
std::size_t width(std::string_view s) {
  return static_cast<std::size_t>(
      std::count_if(s.begin(), s.end(), [](char c) { return (c & 0xC0) != 0x80; }));
}

std::string pad(std::string_view s, std::size_t w) {
  std::string out(s);
  out.append(w > width(s) ? w - width(s) : 0, ' ');
  return out;
}

std::string scalar(const io::json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

bool all_scalars(const io::json& arr) {
  return std::all_of(arr.begin(), arr.end(), [](const io::json& v) { return v.is_primitive(); });
}

std::string join(const io::json& arr, std::string_view open, std::string_view close,
                 std::string_view sep) {
  std::string out;
  for (const auto& v : arr) {
    if (!out.empty()) out += sep;
    out += std::string(open) + scalar(v) + std::string(close);
  }
  return out;
}

std::string colored(std::string_view text, Outcome outcome, bool color) {
  if (!color) return std::string(text);
  const char* code = outcome == Outcome::pass ? "\033[32m"
                     : outcome == Outcome::fail ? "\033[31m"
                                                : "\033[33m";
  return code + std::string(text) + "\033[0m";
}

// Keys ending in "sequence" hold ideal generators and render as (g0),(g1),...
void render_payload(std::ostringstream& os, const io::json& payload) {
  if (!payload.is_object()) {
    os << "  " << payload.dump() << '\n';
    return;
  }
  std::size_t key_width = 0;
  for (const auto& [key, value] : payload.items()) key_width = std::max(key_width, key.size());
  for (const auto& [key, value] : payload.items()) {
    os << "  " << pad(key, key_width) << "  ";
    const bool is_sequence = key.ends_with("sequence");
    if (value.is_array() && all_scalars(value)) {
      os << (is_sequence ? join(value, "(", ")", ",") : join(value, "", "", " ")) << '\n';
    } else if (value.is_array() && std::all_of(value.begin(), value.end(), [](const auto& v) {
                 return v.is_array() && all_scalars(v);
               })) {
      os << value.size() << " entries\n";
      for (const auto& row : value) os << "    (" << join(row, "", "", ",") << ")\n";
    } else if (value.is_primitive()) {
      os << scalar(value) << '\n';
    } else {
      os << value.dump() << '\n';
    }
  }
}

}  // namespace

std::string_view to_string(Status status) {
  switch (status) {
    case Status::ok: return "ok";
    case Status::violation: return "violation";
    case Status::vacuous: return "vacuous";
  }
  return "?";
}

Status Report::status() const {
  if (std::any_of(details.begin(), details.end(),
                  [](const Check& c) { return c.outcome == Outcome::fail; })) {
    return Status::violation;
  }
  if (!details.empty() && std::all_of(details.begin(), details.end(),
                                      [](const Check& c) { return c.vacuous(); })) {
    return Status::vacuous;
  }
  return Status::ok;
}

io::json Report::to_json() const {
  io::json rows = io::json::array();
  for (const auto& d : details) {
    rows.push_back({{"check", d.name},
                    {"outcome", std::string(elw::to_string(d.outcome))},
                    {"witness", d.witness}});
  }
  io::json j = {{"command", command},
                {"status", std::string(to_string(status()))},
                {"details", rows}};
  j["payload"] = payload ? *payload : io::json(nullptr);
  return j;
}

std::string Report::to_table(bool color) const {
  std::ostringstream os;
  os << "command  " << command << '\n';
  os << "status   " << to_string(status()) << '\n';
  if (!details.empty()) {
    std::size_t name_w = width("CHECK"), outcome_w = width("OUTCOME");
    for (const auto& d : details) {
      name_w = std::max(name_w, width(d.name));
      outcome_w = std::max(outcome_w, width(elw::to_string(d.outcome)));
    }
    os << pad("CHECK", name_w) << "  " << pad("OUTCOME", outcome_w) << "  WITNESS\n";
    for (const auto& d : details) {
      os << pad(d.name, name_w) << "  "
         << colored(pad(elw::to_string(d.outcome), outcome_w), d.outcome, color) << "  "
         << d.witness << '\n';
    }
  }
  if (payload) {
    os << "payload\n";
    render_payload(os, *payload);
  }
  return os.str();
}

}  // namespace elw::cli
