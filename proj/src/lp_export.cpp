#include "vne/lp_export.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace vne {

namespace {

std::string escape_id(const std::string& id) {
  static const char* hex = "0123456789ABCDEF";
  std::string out;
  for (unsigned char c : id) {
    if (std::isalnum(c) || c == '_') {
      out.push_back(static_cast<char>(c));
    } else {
      out.push_back('%');
      out.push_back(hex[c >> 4]);
      out.push_back(hex[c & 0xF]);
    }
  }
  return out;
}

}  // namespace

std::string export_lp(const Substrate& substrate, const Request& request) {
  if (substrate.tau != request.tau)
    throw Error("substrate and request disagree on the resource dimension");
  if (!request.nodes.empty() && substrate.nodes.empty())
    throw Error("cannot export: request nodes but empty substrate");
  const std::size_t tau = substrate.tau;

  // Escaped names must stay collision-free.
  std::map<std::string, std::string> seen;
  auto name_of = [&](const std::string& id) {
    std::string esc = escape_id(id);
    auto [it, inserted] = seen.emplace(esc, id);
    if (!inserted && it->second != id)
      throw Error("identifier collision after escaping: \"" + id + "\" vs \"" + it->second + "\"");
    return esc;
  };
  auto y_name = [&](int i, int u) {
    return "y_" + name_of(request.nodes[i].id) + "_" + name_of(substrate.nodes[u].id);
  };
  auto z_name = [&](const RequestEdge& re, const SubstrateEdge& se) {
    return "z_" + name_of(request.nodes[re.src].id) + "_" + name_of(request.nodes[re.dst].id) +
           "__" + name_of(substrate.nodes[se.src].id) + "_" + name_of(substrate.nodes[se.dst].id);
  };

  const int nr = static_cast<int>(request.nodes.size());
  const int ns = static_cast<int>(substrate.nodes.size());
  const int mr = static_cast<int>(request.edges.size());
  const int ms = static_cast<int>(substrate.edges.size());

  if (nr == 0) {
    // Nothing to embed; a self-contained document with optimum 0.
    return "\\ vnembed MCF embedding formulation (empty request)\n"
           "Minimize\n obj: 0 y_none\nSubject To\n fix_none: y_none = 0\n"
           "Binary\n y_none\nEnd\n";
  }

  std::ostringstream lp;
  lp << "\\ vnembed MCF embedding formulation\n";
  lp << "Minimize\n obj:";
  bool any_term = false;
  auto emit_term = [&](const Cost& coef, const std::string& var) {
    if (coef == Cost::zero()) return;
    if (coef.is_saturated()) throw Error("objective coefficient overflow for " + var);
    lp << (any_term ? " + " : " ") << coef.to_decimal() << " " << var;
    any_term = true;
  };
  for (int i = 0; i < nr; ++i)
    for (int u = 0; u < ns; ++u)
      emit_term(Cost::dot(request.nodes[i].demand, substrate.nodes[u].cost), y_name(i, u));
  for (int k = 0; k < mr; ++k)
    for (int l = 0; l < ms; ++l)
      emit_term(Cost::dot(request.edges[k].demand, substrate.edges[l].cost),
                z_name(request.edges[k], substrate.edges[l]));
  if (!any_term) lp << " 0 " << y_name(0, 0);
  lp << "\n";

  lp << "Subject To\n";
  // Every request node lands somewhere.
  for (int i = 0; i < nr; ++i) {
    lp << " asg_" << i << ":";
    for (int u = 0; u < ns; ++u) lp << (u ? " + " : " ") << y_name(i, u);
    lp << " = 1\n";
  }
  // Nodes that cannot hold the demand are forbidden. An empty family keeps
  // its row via a zero-coefficient anchor so the structure stays visible.
  for (int i = 0; i < nr; ++i) {
    lp << " fbn_" << i << ":";
    bool any = false;
    for (int u = 0; u < ns; ++u) {
      if (vec_leq(request.nodes[i].demand, substrate.nodes[u].capacity)) continue;
      lp << (any ? " + " : " ") << y_name(i, u);
      any = true;
    }
    if (!any) lp << " 0 " << y_name(i, 0);
    lp << " = 0\n";
  }
  // Unit flow for each request edge: out-flow minus in-flow at every
  // substrate node matches the source/target indicators.
  for (int k = 0; k < mr; ++k) {
    const RequestEdge& re = request.edges[k];
    for (int u = 0; u < ns; ++u) {
      lp << " flw_" << k << "_" << u << ":";
      bool any = false;
      for (int l = 0; l < ms; ++l) {
        if (substrate.edges[l].src == u) {
          lp << (any ? " + " : " ") << z_name(re, substrate.edges[l]);
          any = true;
        } else if (substrate.edges[l].dst == u) {
          lp << (any ? " - " : " - ") << z_name(re, substrate.edges[l]);
          any = true;
        }
      }
      lp << (any ? " - " : " - ") << y_name(re.src, u) << " + " << y_name(re.dst, u) << " = 0\n";
    }
  }
  // Substrate edges that cannot hold the demand are forbidden.
  for (int k = 0; k < mr; ++k) {
    const RequestEdge& re = request.edges[k];
    lp << " fbe_" << k << ":";
    bool any = false;
    for (int l = 0; l < ms; ++l) {
      if (vec_leq(re.demand, substrate.edges[l].capacity)) continue;
      lp << (any ? " + " : " ") << z_name(re, substrate.edges[l]);
      any = true;
    }
    if (!any) {
      if (ms > 0)
        lp << " 0 " << z_name(re, substrate.edges[0]);
      else
        lp << " 0 " << y_name(re.src, 0);
    }
    lp << " = 0\n";
  }
  // Capacity sums, one scalar row per resource dimension; unbounded
  // capacities make the row vacuous, so it is omitted.
  for (int u = 0; u < ns; ++u)
    for (std::size_t t = 0; t < tau; ++t) {
      if (substrate.nodes[u].capacity[t].is_top()) continue;
      lp << " ncap_" << u << "_" << t << ":";
      bool any = false;
      for (int i = 0; i < nr; ++i) {
        const Quantity& d = request.nodes[i].demand[t];
        if (d.is_zero()) continue;
        lp << (any ? " + " : " ") << d.to_decimal() << " " << y_name(i, u);
        any = true;
      }
      if (!any) lp << " 0 " << y_name(0, u);
      lp << " <= " << substrate.nodes[u].capacity[t].to_decimal() << "\n";
    }
  for (int l = 0; l < ms; ++l)
    for (std::size_t t = 0; t < tau; ++t) {
      if (substrate.edges[l].capacity[t].is_top()) continue;
      lp << " ecap_" << l << "_" << t << ":";
      bool any = false;
      for (int k = 0; k < mr; ++k) {
        const Quantity& d = request.edges[k].demand[t];
        if (d.is_zero()) continue;
        lp << (any ? " + " : " ") << d.to_decimal() << " "
           << z_name(request.edges[k], substrate.edges[l]);
        any = true;
      }
      if (!any) lp << " 0 " << y_name(0, 0);
      lp << " <= " << substrate.edges[l].capacity[t].to_decimal() << "\n";
    }

  lp << "Binary\n";
  for (int i = 0; i < nr; ++i)
    for (int u = 0; u < ns; ++u) lp << " " << y_name(i, u) << "\n";
  for (int k = 0; k < mr; ++k)
    for (int l = 0; l < ms; ++l) lp << " " << z_name(request.edges[k], substrate.edges[l]) << "\n";
  lp << "End\n";
  return lp.str();
}

}  // namespace vne
