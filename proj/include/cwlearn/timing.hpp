#ifndef CWLEARN_TIMING_HPP
#define CWLEARN_TIMING_HPP

namespace cwlearn {

// PHY/MAC timing constants. All values in seconds except control_rate.
//
// The defaults below are the single frozen constant set used throughout the
// project (802.11n OFDM flavored, ns-3 style):
//   slot            9 us
//   DIFS           34 us
//   SIFS           16 us
//   PHY preamble + header  40 us
//   ACK            40 us preamble + 112 bits at the 24 Mbps control rate
// Every output file echoes the values actually used, so runs remain
// reproducible even when a scenario overrides them.
struct MacTiming {
    double slot_time = 9e-6;
    double difs = 34e-6;
    double sifs = 16e-6;
    double phy_header = 40e-6;       // preamble + PHY header
    double ack_duration = 40e-6 + 112.0 / 24e6;
    double control_rate = 24e6;      // bits/s, used for MAC control frames

    void validate() const;           // throws std::invalid_argument
    static MacTiming ieee80211n() { return MacTiming{}; }
};

// One frame class: payload size in bits and the PHY data rate it is sent at.
// MAC header bits are folded into the payload.
struct FrameSpec {
    double payload_bits = 8000.0;
    double phy_rate = 26e6;          // bits/s

    void validate() const;
};

// Duration of a successful transmission: data frame, SIFS, ACK, then DIFS.
double success_duration(const FrameSpec& frame, const MacTiming& timing);

// Duration of a failed transmission: data frame then DIFS, no ACK exchange.
double failure_duration(const FrameSpec& frame, const MacTiming& timing);

}  // namespace cwlearn

#endif
