"""hemobank: a blood donation management service.

Donor registry with ABO/RhD compatibility matching, a 90-day post-donation
cooldown, patient blood requests, messaging, notifications, and an admin
surface, exposed over HTTP/JSON.
"""

__version__ = "0.1.0"
