"""
Factories for campaign records.
"""

import factory

from apps.campaigns.models import CampaignItem, CampaignRun


class CampaignRunFactory(factory.django.DjangoModelFactory):
    class Meta:
        model = CampaignRun

    command = "verify_theorem"
    parameters = factory.LazyFunction(lambda: {
        "leaves": ["a", "b", "c"],
        "ring": "z",
        "max_cone_subset": 0,
        "operad": "comm",
        "operad_max_arity": 4,
    })
    status = "running"


class CampaignItemFactory(factory.django.DjangoModelFactory):
    class Meta:
        model = CampaignItem

    run = factory.SubFactory(CampaignRunFactory)
    key = factory.Sequence(lambda n: f"item-{n:04d}")
    passed = True
    payload = factory.LazyAttribute(lambda item: {"key": item.key, "passed": item.passed})
