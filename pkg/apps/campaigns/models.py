"""
Campaign records: one row per run and one per finished item, so long runs
can be resumed by item key.
"""

from django.db import models
from django.utils.translation import gettext_lazy as _


class CampaignRun(models.Model):
    """
    A recorded invocation of a campaign command.
    """
    STATUS_CHOICES = [
        ('running', _('Running')),
        ('finished', _('Finished')),
        ('failed', _('Failed')),
    ]

    command = models.CharField(max_length=50)
    parameters = models.JSONField(default=dict)
    status = models.CharField(max_length=10, choices=STATUS_CHOICES, default='running')
    passed = models.BooleanField(null=True, blank=True)
    created_at = models.DateTimeField(auto_now_add=True)
    updated_at = models.DateTimeField(auto_now=True)

    class Meta:
        verbose_name = _('Campaign Run')
        verbose_name_plural = _('Campaign Runs')
        ordering = ['-created_at']

    def __str__(self):
        return f"{self.command} #{self.pk} ({self.get_status_display()})"


class CampaignItem(models.Model):
    """
    The serialized result of one work unit of a run.
    """
    run = models.ForeignKey(CampaignRun, on_delete=models.CASCADE, related_name='items')
    key = models.CharField(max_length=255)
    passed = models.BooleanField()
    payload = models.JSONField(default=dict)
    created_at = models.DateTimeField(auto_now_add=True)

    class Meta:
        verbose_name = _('Campaign Item')
        verbose_name_plural = _('Campaign Items')
        unique_together = ['run', 'key']
        ordering = ['key']

    def __str__(self):
        return f"{self.key} ({'pass' if self.passed else 'fail'})"
