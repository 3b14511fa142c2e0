#include <cmath>
#include <cstdio>
#include <string>

#include "zq2/transform.hpp"

namespace zq2 {
namespace {

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

const char* kind_str(SignalKind k) {
    switch (k) {
        case SignalKind::Power: return "pow";
        case SignalKind::ShiftedPower: return "shifted";
        case SignalKind::Constant: return "const";
    }
    return "?";
}

// H itself can overflow a double (t^1000 signals); serialize the value when
// finite, otherwise a string in scientific notation from its exact log10.
std::string h_field(const TransformReport& r) {
    if (std::isfinite(r.h)) return num(r.h);
    const double e = std::floor(r.log10_h);
    const double mant = std::pow(10.0, r.log10_h - e);
    char buf[48];
    std::snprintf(buf, sizeof buf, "\"%.12ge+%.0f\"", mant, e);
    return buf;
}

std::string node_array(const std::vector<double>& nodes) {
    std::string out = "[";
    for (size_t i = 0; i < nodes.size(); ++i) {
        if (i) out += ",";
        out += num(nodes[i]);
    }
    return out + "]";
}

}  // namespace

std::string report_to_json(const TransformReport& r) {
    const SignalSpec& s = r.signal;
    std::string out = "{";
    out += "\"signal\":{\"kind\":\"";
    out += kind_str(s.kind());
    out += "\",\"delta\":" + num(s.delta());
    out += ",\"L\":";
    out += s.kind() == SignalKind::ShiftedPower ? num(s.shift_l()) : "null";
    out += "},\"T\":" + num(r.t);
    out += ",\"U\":" + num(r.u);
    out += ",\"k\":" + std::to_string(r.k);
    out += ",\"d_alpha\":" + num(r.alpha.d);
    out += ",\"d_beta\":" + num(r.beta.d);
    out += ",\"alphas\":" + node_array(r.alpha.nodes);
    out += ",\"betas\":" + node_array(r.beta.nodes);
    out += ",\"H\":" + h_field(r);
    out += ",\"g\":" + num(r.g);
    out += ",\"G2\":" + num(r.g2);
    out += ",\"discrepancy\":" + num(r.discrepancy);
    out += ",\"bound\":" + num(r.bound);
    out += ",\"kappa\":" + num(r.kappa);
    out += ",\"min_abs_z_alpha\":" + num(r.min_abs_z_alpha);
    out += ",\"min_abs_z_beta\":" + num(r.min_abs_z_beta);
    out += ",\"conditioned\":";
    out += r.conditioned ? "true" : "false";
    out += ",\"table_digest\":\"" + r.table_digest + "\"}";
    return out;
}

std::string report_csv_header() {
    return "kind,delta,L,T,U,k,d_alpha,d_beta,H,g,G2,discrepancy,bound,kappa,"
           "min_abs_z_alpha,min_abs_z_beta,conditioned,table_digest";
}

std::string report_to_csv(const TransformReport& r) {
    const SignalSpec& s = r.signal;
    std::string out;
    out += kind_str(s.kind());
    out += "," + num(s.delta());
    out += ",";
    out += s.kind() == SignalKind::ShiftedPower ? num(s.shift_l()) : "";
    out += "," + num(r.t);
    out += "," + num(r.u);
    out += "," + std::to_string(r.k);
    out += "," + num(r.alpha.d);
    out += "," + num(r.beta.d);
    out += ",";
    if (std::isfinite(r.h)) {
        out += num(r.h);
    } else {
        std::string h = h_field(r);
        out += h.substr(1, h.size() - 2);  // bare, CSV needs no quotes
    }
    out += "," + num(r.g);
    out += "," + num(r.g2);
    out += "," + num(r.discrepancy);
    out += "," + num(r.bound);
    out += "," + num(r.kappa);
    out += "," + num(r.min_abs_z_alpha);
    out += "," + num(r.min_abs_z_beta);
    out += ",";
    out += r.conditioned ? "true" : "false";
    out += "," + r.table_digest;
    return out;
}

}  // namespace zq2
