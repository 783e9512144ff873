#include "cyclonorm/cli/output.hpp"

#include <nlohmann/json.hpp>

#include <ostream>
#include <sstream>

namespace cyclonorm::cli {

namespace {

using nlohmann::ordered_json;

std::string render_table(const std::vector<BigInt>& v, char sep) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i].get_str();
  }
  return s + "]";
}

std::string value_text(const RowValue& v, char table_sep) {
  struct Visitor {
    char sep;
    std::string operator()(std::monostate) const { return {}; }
    std::string operator()(const BigInt& x) const { return x.get_str(); }
    std::string operator()(const std::vector<BigInt>& t) const { return render_table(t, sep); }
    std::string operator()(const QuadElem& q) const { return render_quad(q); }
  };
  return std::visit(Visitor{table_sep}, v);
}

ordered_json value_json(const RowValue& v) {
  struct Visitor {
    ordered_json operator()(std::monostate) const { return nullptr; }
    ordered_json operator()(const BigInt& x) const { return x.get_str(); }
    ordered_json operator()(const std::vector<BigInt>& t) const {
      ordered_json arr = ordered_json::array();
      for (const auto& x : t) arr.push_back(x.get_str());
      return arr;
    }
    ordered_json operator()(const QuadElem& q) const {
      return ordered_json{{"a", q.a().get_str()},
                          {"b", q.b().get_str()},
                          {"den", std::to_string(q.den())},
                          {"dstar", std::to_string(q.dstar())}};
    }
  };
  return std::visit(Visitor{}, v);
}

template <class T>
ordered_json opt_json(const std::optional<T>& v) {
  return v ? ordered_json(*v) : ordered_json(nullptr);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

const char* bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

std::string render_quad(const QuadElem& q) {
  const std::string root = "sqrt(" + std::to_string(q.dstar()) + ")";
  std::string body;
  if (q.a() != 0) body = q.a().get_str();
  if (q.b() != 0) {
    const bool neg = q.b() < 0;
    const BigInt mag = neg ? BigInt(-q.b()) : q.b();
    const std::string coef = mag == 1 ? root : mag.get_str() + "*" + root;
    if (body.empty()) {
      body = (neg ? "-" : "") + coef;
    } else {
      body += (neg ? " - " : " + ") + coef;
    }
  }
  if (body.empty()) body = "0";
  if (q.den() == 1) return body;
  return "(" + body + ")/" + std::to_string(q.den());
}

void Emitter::emit(const ResultRow& row) {
  switch (format_) {
    case Format::kJson: {
      ordered_json j;
      j["command"] = row.command;
      j["n"] = opt_json(row.n);
      j["poly"] = opt_json(row.poly);
      j["value"] = value_json(row.value);
      j["unit"] = opt_json(row.unit);
      j["method"] = opt_json(row.method);
      j["ok"] = opt_json(row.ok);
      out_ << j.dump() << '\n';
      break;
    }
    case Format::kCsv: {
      if (!header_written_) {
        out_ << "command,n,poly,value,unit,method,ok\n";
        header_written_ = true;
      }
      out_ << csv_field(row.command) << ',' << (row.n ? std::to_string(*row.n) : "") << ','
           << csv_field(row.poly.value_or("")) << ',' << csv_field(value_text(row.value, ';'))
           << ',' << (row.unit ? bool_text(*row.unit) : "") << ',' << row.method.value_or("")
           << ',' << (row.ok ? bool_text(*row.ok) : "") << '\n';
      break;
    }
    case Format::kText: {
      std::ostringstream line;
      line << row.command;
      if (row.n) line << " n=" << *row.n;
      if (row.poly) line << " poly=\"" << *row.poly << '"';
      if (!std::holds_alternative<std::monostate>(row.value)) {
        line << " value=" << value_text(row.value, ',');
      }
      if (row.unit) line << " unit=" << bool_text(*row.unit);
      if (row.method) line << " method=" << *row.method;
      if (row.ok) line << " ok=" << bool_text(*row.ok);
      if (!row.note.empty()) line << ' ' << row.note;
      out_ << line.str() << '\n';
      break;
    }
  }
  out_.flush();
}

}  // namespace cyclonorm::cli
